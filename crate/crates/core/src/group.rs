//! Finite group families: specs, presentations, and concrete enumerable
//! implementations with canonical element encodings.
//!
//! Every family carries a faithful canonical form, so element equality and
//! hashing are structural: residue tuples for (products of) cyclic groups,
//! one-line permutations for type A, signed permutations for types B and D
//! (D restricted to an even number of sign changes), a (rotation,
//! reflection) pair for dihedral groups and I2(m), and component tuples for
//! products.
//!
//! Generator order is fixed per family and defines the lexicographic word
//! order used by the Cayley BFS: `s1 < s2 < ...`, and for products all of
//! the left factor's generators precede the right factor's.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::DEFAULT_ORDER_CAP;

/// A finite group family instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Z_m with one generator, relator a^m.
    Cyclic { m: u64 },
    /// Z_{n1} x ... x Z_{nk}, every modulus > 1.
    CyclicProduct { moduli: Vec<u64> },
    /// Dihedral group of order 2m in the rotation/reflection presentation
    /// `<a, b | a^m = b^2 = 1, aba = b>`.
    Dihedral { m: u64 },
    /// Coxeter type A_rank (the symmetric group S_{rank+1}).
    CoxeterA { rank: u32 },
    /// Coxeter type B_rank (signed permutations), rank >= 2.
    CoxeterB { rank: u32 },
    /// Coxeter type D_rank (evenly signed permutations), rank >= 4.
    CoxeterD { rank: u32 },
    /// Coxeter type I2(m): two reflections with (s1 s2)^m = 1, m >= 3.
    CoxeterI2 { m: u64 },
    /// Direct product of irreducible Coxeter specs.
    CoxeterProduct { factors: Vec<GroupSpec> },
}

impl GroupSpec {
    /// Predicted group order, before any enumeration.
    pub fn predicted_order(&self) -> Result<u128> {
        fn factorial(n: u32) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
        }
        match self {
            GroupSpec::Cyclic { m } => {
                if *m == 0 {
                    return Err(Error::InvalidSpec("cyclic modulus must be positive".into()));
                }
                Ok(*m as u128)
            }
            GroupSpec::CyclicProduct { moduli } => {
                if moduli.len() < 2 {
                    return Err(Error::InvalidSpec(
                        "cyclic product needs at least two moduli".into(),
                    ));
                }
                if moduli.iter().any(|&m| m < 2) {
                    return Err(Error::InvalidSpec("cyclic product moduli must be > 1".into()));
                }
                moduli
                    .iter()
                    .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
                    .ok_or(Error::CapExceeded {
                        predicted: u128::MAX,
                        cap: DEFAULT_ORDER_CAP,
                    })
            }
            GroupSpec::Dihedral { m } => {
                if *m < 2 {
                    return Err(Error::InvalidSpec("dihedral parameter must be >= 2".into()));
                }
                Ok(2 * *m as u128)
            }
            GroupSpec::CoxeterA { rank } => {
                if *rank < 1 {
                    return Err(Error::InvalidSpec("type A rank must be >= 1".into()));
                }
                factorial(rank + 1).ok_or(Error::CapExceeded {
                    predicted: u128::MAX,
                    cap: DEFAULT_ORDER_CAP,
                })
            }
            GroupSpec::CoxeterB { rank } => {
                if *rank < 2 {
                    return Err(Error::InvalidSpec("type B rank must be >= 2".into()));
                }
                factorial(*rank)
                    .and_then(|f| f.checked_mul(1u128.checked_shl(*rank)?))
                    .ok_or(Error::CapExceeded {
                        predicted: u128::MAX,
                        cap: DEFAULT_ORDER_CAP,
                    })
            }
            GroupSpec::CoxeterD { rank } => {
                if *rank < 4 {
                    return Err(Error::InvalidSpec("type D rank must be >= 4".into()));
                }
                factorial(*rank)
                    .and_then(|f| f.checked_mul(1u128.checked_shl(*rank - 1)?))
                    .ok_or(Error::CapExceeded {
                        predicted: u128::MAX,
                        cap: DEFAULT_ORDER_CAP,
                    })
            }
            GroupSpec::CoxeterI2 { m } => {
                if *m < 3 {
                    return Err(Error::InvalidSpec("I2 parameter must be >= 3".into()));
                }
                Ok(2 * *m as u128)
            }
            GroupSpec::CoxeterProduct { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("coxeter product must be non-empty".into()));
                }
                for f in factors {
                    if !f.is_irreducible_coxeter() {
                        return Err(Error::InvalidSpec(
                            "coxeter product factors must be irreducible Coxeter specs".into(),
                        ));
                    }
                }
                factors.iter().try_fold(1u128, |acc, f| {
                    acc.checked_mul(f.predicted_order()?).ok_or(Error::CapExceeded {
                        predicted: u128::MAX,
                        cap: DEFAULT_ORDER_CAP,
                    })
                })
            }
        }
    }

    fn is_irreducible_coxeter(&self) -> bool {
        matches!(
            self,
            GroupSpec::CoxeterA { .. }
                | GroupSpec::CoxeterB { .. }
                | GroupSpec::CoxeterD { .. }
                | GroupSpec::CoxeterI2 { .. }
        )
    }

    /// True for specs whose generators are all reflections (the families a
    /// braid lift is defined for).
    pub fn is_coxeter(&self) -> bool {
        self.is_irreducible_coxeter() || matches!(self, GroupSpec::CoxeterProduct { .. })
    }
}

/// Sign of a word letter: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One letter of a word: a generator index with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn plus(generator: usize) -> Self {
        Letter { generator, sign: Sign::Plus }
    }

    pub fn minus(generator: usize) -> Self {
        Letter { generator, sign: Sign::Minus }
    }
}

/// A word over the generators and their inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_odd_length(&self) -> bool {
        self.letters.len() % 2 == 1
    }
}

/// A finite presentation: generator count plus relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
}

/// True iff some relator has an odd letter count. This is the dichotomy
/// that decides whether the walk's limit law splits by length parity.
pub fn has_odd_relator(p: &Presentation) -> bool {
    p.relators.iter().any(Word::has_odd_length)
}

/// Canonical element encoding. Two equal group elements always have
/// structurally identical encodings, so derived `Eq`/`Ord`/`Hash` agree
/// with group equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// Residue tuple, one entry per cyclic factor.
    Residues(Vec<u32>),
    /// One-line permutation of 1..=n (type A_{n-1}).
    Permutation(Vec<u8>),
    /// One-line signed permutation; entry i holds w(i) in +-(1..=n).
    SignedPermutation(Vec<i8>),
    /// Rotation index and reflection bit (dihedral and I2 families).
    Rotor { rotation: u32, reflected: bool },
    /// Tuple of component encodings for product specs.
    Product(Vec<Element>),
}

#[derive(Debug, Clone)]
enum Kind {
    Cyclic { m: u32 },
    CyclicProduct { moduli: Vec<u32> },
    /// Shared rotation/reflection arithmetic for Dihedral and I2; the two
    /// families differ only in their generator lists and presentations.
    Rotor { m: u32 },
    Permutations { n: u8 },
    SignedPermutations { n: u8 },
    Product { factors: Vec<ConcreteGroup> },
}

/// A concrete, enumerable finite group. Immutable after construction and
/// safe to share across threads.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    spec: GroupSpec,
    kind: Kind,
    order: u64,
    generators: Vec<Element>,
    generator_inverses: Vec<Element>,
    involutive: Vec<bool>,
}

/// Builds a concrete group for `spec` under the default order cap.
pub fn build_group(spec: &GroupSpec) -> Result<ConcreteGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

/// Builds a concrete group, rejecting specs whose predicted order exceeds
/// `cap`.
pub fn build_group_with_cap(spec: &GroupSpec, cap: u64) -> Result<ConcreteGroup> {
    let predicted = spec.predicted_order()?;
    if predicted > cap as u128 {
        return Err(Error::CapExceeded { predicted, cap });
    }
    let order = predicted as u64;

    let kind = match spec {
        GroupSpec::Cyclic { m } => Kind::Cyclic { m: *m as u32 },
        GroupSpec::CyclicProduct { moduli } => Kind::CyclicProduct {
            moduli: moduli.iter().map(|&m| m as u32).collect(),
        },
        GroupSpec::Dihedral { m } | GroupSpec::CoxeterI2 { m } => Kind::Rotor { m: *m as u32 },
        GroupSpec::CoxeterA { rank } => Kind::Permutations { n: (*rank + 1) as u8 },
        GroupSpec::CoxeterB { rank } | GroupSpec::CoxeterD { rank } => {
            Kind::SignedPermutations { n: *rank as u8 }
        }
        GroupSpec::CoxeterProduct { factors } => Kind::Product {
            factors: factors
                .iter()
                .map(|f| build_group_with_cap(f, cap))
                .collect::<Result<Vec<_>>>()?,
        },
    };

    let generators = generator_list(spec, &kind);
    let mut group = ConcreteGroup {
        spec: spec.clone(),
        kind,
        order,
        generators,
        generator_inverses: Vec::new(),
        involutive: Vec::new(),
    };
    group.generator_inverses = group.generators.iter().map(|g| group.inverse(g)).collect();
    group.involutive = group
        .generators
        .iter()
        .zip(&group.generator_inverses)
        .map(|(g, gi)| g == gi)
        .collect();
    Ok(group)
}

fn generator_list(spec: &GroupSpec, kind: &Kind) -> Vec<Element> {
    match (spec, kind) {
        (GroupSpec::Cyclic { .. }, Kind::Cyclic { m }) => {
            vec![Element::Residues(vec![1 % m])]
        }
        (GroupSpec::CyclicProduct { .. }, Kind::CyclicProduct { moduli }) => (0..moduli.len())
            .map(|i| {
                let mut r = vec![0u32; moduli.len()];
                r[i] = 1 % moduli[i];
                Element::Residues(r)
            })
            .collect(),
        // Dihedral: a = rotation by one, b = base reflection.
        (GroupSpec::Dihedral { .. }, Kind::Rotor { m }) => vec![
            Element::Rotor { rotation: 1 % m, reflected: false },
            Element::Rotor { rotation: 0, reflected: true },
        ],
        // I2(m): two reflections s1, s2 with s1 s2 = rotation by one.
        (GroupSpec::CoxeterI2 { .. }, Kind::Rotor { m }) => vec![
            Element::Rotor { rotation: 0, reflected: true },
            Element::Rotor { rotation: m - 1, reflected: true },
        ],
        (GroupSpec::CoxeterA { .. }, Kind::Permutations { n }) => (1..*n)
            .map(|i| {
                let mut p: Vec<u8> = (1..=*n).collect();
                p.swap((i - 1) as usize, i as usize);
                Element::Permutation(p)
            })
            .collect(),
        // B_n: s1..s_{n-1} adjacent transpositions, s_n flips the sign of
        // the last coordinate (the 4-bond sits between s_{n-1} and s_n).
        (GroupSpec::CoxeterB { .. }, Kind::SignedPermutations { n }) => {
            let mut gens: Vec<Element> = (1..*n)
                .map(|i| {
                    let mut p: Vec<i8> = (1..=*n as i8).collect();
                    p.swap((i - 1) as usize, i as usize);
                    Element::SignedPermutation(p)
                })
                .collect();
            let mut p: Vec<i8> = (1..=*n as i8).collect();
            p[(*n - 1) as usize] = -(*n as i8);
            gens.push(Element::SignedPermutation(p));
            gens
        }
        // D_n: s1..s_{n-1} as in B, s_n maps coordinate n-1 to -n and n to
        // -(n-1) (the fork at node n-2).
        (GroupSpec::CoxeterD { .. }, Kind::SignedPermutations { n }) => {
            let mut gens: Vec<Element> = (1..*n)
                .map(|i| {
                    let mut p: Vec<i8> = (1..=*n as i8).collect();
                    p.swap((i - 1) as usize, i as usize);
                    Element::SignedPermutation(p)
                })
                .collect();
            let mut p: Vec<i8> = (1..=*n as i8).collect();
            p[(*n - 2) as usize] = -(*n as i8);
            p[(*n - 1) as usize] = -(*n as i8 - 1);
            gens.push(Element::SignedPermutation(p));
            gens
        }
        (GroupSpec::CoxeterProduct { .. }, Kind::Product { factors }) => {
            let identities: Vec<Element> = factors.iter().map(|f| f.identity()).collect();
            let mut gens = Vec::new();
            for (fi, factor) in factors.iter().enumerate() {
                for g in factor.generators() {
                    let mut tuple = identities.clone();
                    tuple[fi] = g.clone();
                    gens.push(Element::Product(tuple));
                }
            }
            gens
        }
        _ => unreachable!("spec/kind mismatch"),
    }
}

impl ConcreteGroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> Element {
        match &self.kind {
            Kind::Cyclic { .. } => Element::Residues(vec![0]),
            Kind::CyclicProduct { moduli } => Element::Residues(vec![0; moduli.len()]),
            Kind::Rotor { .. } => Element::Rotor { rotation: 0, reflected: false },
            Kind::Permutations { n } => Element::Permutation((1..=*n).collect()),
            Kind::SignedPermutations { n } => {
                Element::SignedPermutation((1..=*n as i8).collect())
            }
            Kind::Product { factors } => {
                Element::Product(factors.iter().map(|f| f.identity()).collect())
            }
        }
    }

    /// Generators in the family's fixed documented order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_inverses(&self) -> &[Element] {
        &self.generator_inverses
    }

    /// True iff generator `i` is an involution (its own inverse).
    pub fn is_involutive(&self, i: usize) -> bool {
        self.involutive[i]
    }

    /// Group product `a * b`. For permutation encodings this is function
    /// composition `(a * b)(x) = a(b(x))`, so evaluating a word multiplies
    /// its letters left to right.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        match (&self.kind, a, b) {
            (Kind::Cyclic { m }, Element::Residues(x), Element::Residues(y)) => {
                Element::Residues(vec![add_mod(x[0], y[0], *m)])
            }
            (Kind::CyclicProduct { moduli }, Element::Residues(x), Element::Residues(y)) => {
                Element::Residues(
                    moduli
                        .iter()
                        .zip(x.iter().zip(y))
                        .map(|(&m, (&a, &b))| add_mod(a, b, m))
                        .collect(),
                )
            }
            (
                Kind::Rotor { m },
                Element::Rotor { rotation: r1, reflected: e1 },
                Element::Rotor { rotation: r2, reflected: e2 },
            ) => {
                // a^r b reflections satisfy b a^k = a^{-k} b.
                let rotation = if *e1 { sub_mod(*r1, *r2, *m) } else { add_mod(*r1, *r2, *m) };
                Element::Rotor { rotation, reflected: e1 ^ e2 }
            }
            (Kind::Permutations { .. }, Element::Permutation(p), Element::Permutation(q)) => {
                Element::Permutation(q.iter().map(|&x| p[(x - 1) as usize]).collect())
            }
            (
                Kind::SignedPermutations { .. },
                Element::SignedPermutation(p),
                Element::SignedPermutation(q),
            ) => Element::SignedPermutation(q.iter().map(|&x| apply_signed(p, x)).collect()),
            (Kind::Product { factors }, Element::Product(xs), Element::Product(ys)) => {
                Element::Product(
                    factors
                        .iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (a, b))| f.multiply(a, b))
                        .collect(),
                )
            }
            _ => panic!("element encoding does not match group family"),
        }
    }

    pub fn inverse(&self, a: &Element) -> Element {
        match (&self.kind, a) {
            (Kind::Cyclic { m }, Element::Residues(x)) => {
                Element::Residues(vec![neg_mod(x[0], *m)])
            }
            (Kind::CyclicProduct { moduli }, Element::Residues(x)) => Element::Residues(
                moduli.iter().zip(x).map(|(&m, &r)| neg_mod(r, m)).collect(),
            ),
            (Kind::Rotor { m }, Element::Rotor { rotation, reflected }) => {
                if *reflected {
                    // Reflections are involutions.
                    a.clone()
                } else {
                    Element::Rotor { rotation: neg_mod(*rotation, *m), reflected: false }
                }
            }
            (Kind::Permutations { n }, Element::Permutation(p)) => {
                let mut inv = vec![0u8; *n as usize];
                for (i, &img) in p.iter().enumerate() {
                    inv[(img - 1) as usize] = i as u8 + 1;
                }
                Element::Permutation(inv)
            }
            (Kind::SignedPermutations { n }, Element::SignedPermutation(p)) => {
                let mut inv = vec![0i8; *n as usize];
                for (i, &img) in p.iter().enumerate() {
                    let pos = img.unsigned_abs() as usize - 1;
                    inv[pos] = if img > 0 { i as i8 + 1 } else { -(i as i8 + 1) };
                }
                Element::SignedPermutation(inv)
            }
            (Kind::Product { factors }, Element::Product(xs)) => Element::Product(
                factors.iter().zip(xs).map(|(f, x)| f.inverse(x)).collect(),
            ),
            _ => panic!("element encoding does not match group family"),
        }
    }

    /// Multiplies `a` on the right by the letter's generator power.
    pub fn apply_letter(&self, a: &Element, letter: Letter) -> Element {
        let g = match letter.sign {
            Sign::Plus => &self.generators[letter.generator],
            Sign::Minus => &self.generator_inverses[letter.generator],
        };
        self.multiply(a, g)
    }

    /// Evaluates a word left to right, starting from the identity.
    pub fn evaluate_word(&self, word: &Word) -> Element {
        word.letters
            .iter()
            .fold(self.identity(), |acc, &l| self.apply_letter(&acc, l))
    }

    /// Checks that `e` is a structurally valid encoding for this family.
    pub fn validate_element(&self, e: &Element) -> Result<()> {
        let ok = match (&self.kind, e) {
            (Kind::Cyclic { m }, Element::Residues(x)) => x.len() == 1 && x[0] < *m,
            (Kind::CyclicProduct { moduli }, Element::Residues(x)) => {
                x.len() == moduli.len() && x.iter().zip(moduli).all(|(&r, &m)| r < m)
            }
            (Kind::Rotor { m }, Element::Rotor { rotation, .. }) => rotation < m,
            (Kind::Permutations { n }, Element::Permutation(p)) => {
                p.len() == *n as usize && is_permutation(p)
            }
            (Kind::SignedPermutations { n }, Element::SignedPermutation(p)) => {
                let valid = p.len() == *n as usize && is_signed_permutation(p);
                let even_ok = match &self.spec {
                    GroupSpec::CoxeterD { .. } => {
                        p.iter().filter(|&&x| x < 0).count() % 2 == 0
                    }
                    _ => true,
                };
                valid && even_ok
            }
            (Kind::Product { factors }, Element::Product(xs)) => {
                xs.len() == factors.len()
                    && factors
                        .iter()
                        .zip(xs)
                        .all(|(f, x)| f.validate_element(x).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownElement)
        }
    }
}

#[inline]
fn add_mod(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % m as u64) as u32
}

#[inline]
fn sub_mod(a: u32, b: u32, m: u32) -> u32 {
    ((a as u64 + m as u64 - b as u64) % m as u64) as u32
}

#[inline]
fn neg_mod(a: u32, m: u32) -> u32 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

#[inline]
fn apply_signed(p: &[i8], x: i8) -> i8 {
    let img = p[(x.unsigned_abs() - 1) as usize];
    if x > 0 {
        img
    } else {
        -img
    }
}

fn is_permutation(p: &[u8]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        if x == 0 || x as usize > n || seen[(x - 1) as usize] {
            return false;
        }
        seen[(x - 1) as usize] = true;
    }
    true
}

fn is_signed_permutation(p: &[i8]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        let a = x.unsigned_abs() as usize;
        if a == 0 || a > n || seen[a - 1] {
            return false;
        }
        seen[a - 1] = true;
    }
    true
}

/// The family's presentation, with relators in the fixed documented order.
pub fn presentation_of(spec: &GroupSpec) -> Result<Presentation> {
    spec.predicted_order()?;
    let pres = match spec {
        GroupSpec::Cyclic { m } => Presentation {
            generator_count: 1,
            relators: vec![power_word(0, Sign::Plus, *m as usize)],
        },
        GroupSpec::CyclicProduct { moduli } => {
            let k = moduli.len();
            let mut relators: Vec<Word> =
                moduli.iter().enumerate().map(|(i, &m)| power_word(i, Sign::Plus, m as usize)).collect();
            for i in 0..k {
                for j in (i + 1)..k {
                    relators.push(commutator_word(i, j));
                }
            }
            Presentation { generator_count: k, relators }
        }
        GroupSpec::Dihedral { m } => Presentation {
            generator_count: 2,
            relators: vec![
                power_word(0, Sign::Plus, *m as usize),
                power_word(1, Sign::Plus, 2),
                // aba = b, written as the relator a b a b^{-1}.
                Word::new(vec![
                    Letter::plus(0),
                    Letter::plus(1),
                    Letter::plus(0),
                    Letter::minus(1),
                ]),
            ],
        },
        GroupSpec::CoxeterA { .. }
        | GroupSpec::CoxeterB { .. }
        | GroupSpec::CoxeterD { .. }
        | GroupSpec::CoxeterI2 { .. } => {
            let matrix = coxeter_matrix(spec)?;
            coxeter_presentation(&matrix)
        }
        GroupSpec::CoxeterProduct { factors } => {
            let matrices: Vec<Vec<Vec<u64>>> =
                factors.iter().map(coxeter_matrix).collect::<Result<_>>()?;
            let total: usize = matrices.iter().map(|m| m.len()).sum();
            // Block-diagonal Coxeter matrix; cross-factor bonds are 2.
            let mut matrix = vec![vec![2u64; total]; total];
            let mut offset = 0;
            for block in &matrices {
                let k = block.len();
                for i in 0..k {
                    for j in 0..k {
                        matrix[offset + i][offset + j] = block[i][j];
                    }
                }
                offset += k;
            }
            coxeter_presentation(&matrix)
        }
    };
    Ok(pres)
}

/// Coxeter matrix of an irreducible spec; entry (i, j) is the order of
/// s_i s_j.
fn coxeter_matrix(spec: &GroupSpec) -> Result<Vec<Vec<u64>>> {
    let (n, bonds): (usize, Vec<(usize, usize, u64)>) = match spec {
        GroupSpec::CoxeterA { rank } => {
            let n = *rank as usize;
            (n, (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect())
        }
        GroupSpec::CoxeterB { rank } => {
            let n = *rank as usize;
            let mut bonds: Vec<(usize, usize, u64)> =
                (0..n - 2).map(|i| (i, i + 1, 3)).collect();
            bonds.push((n - 2, n - 1, 4));
            (n, bonds)
        }
        GroupSpec::CoxeterD { rank } => {
            let n = *rank as usize;
            let mut bonds: Vec<(usize, usize, u64)> =
                (0..n - 2).map(|i| (i, i + 1, 3)).collect();
            bonds.push((n - 3, n - 1, 3));
            (n, bonds)
        }
        GroupSpec::CoxeterI2 { m } => (2, vec![(0, 1, *m)]),
        _ => {
            return Err(Error::InvalidSpec(String::from(
                "not an irreducible Coxeter spec",
            )))
        }
    };
    let mut matrix = vec![vec![2u64; n]; n];
    for i in 0..n {
        matrix[i][i] = 1;
    }
    for (i, j, m) in bonds {
        matrix[i][j] = m;
        matrix[j][i] = m;
    }
    Ok(matrix)
}

fn coxeter_presentation(matrix: &[Vec<u64>]) -> Presentation {
    let n = matrix.len();
    let mut relators = Vec::new();
    for i in 0..n {
        relators.push(power_word(i, Sign::Plus, 2));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let m = matrix[i][j] as usize;
            let mut letters = Vec::with_capacity(2 * m);
            for _ in 0..m {
                letters.push(Letter::plus(i));
                letters.push(Letter::plus(j));
            }
            relators.push(Word::new(letters));
        }
    }
    Presentation { generator_count: n, relators }
}

fn power_word(generator: usize, sign: Sign, exponent: usize) -> Word {
    Word::new(vec![Letter { generator, sign }; exponent])
}

fn commutator_word(i: usize, j: usize) -> Word {
    Word::new(vec![
        Letter::plus(i),
        Letter::plus(j),
        Letter::minus(i),
        Letter::minus(j),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn enumerate(group: &ConcreteGroup) -> BTreeSet<Element> {
        // Closure under generator multiplication, independent of the BFS in
        // the cayley module.
        let mut seen = BTreeSet::new();
        let mut frontier = vec![group.identity()];
        seen.insert(group.identity());
        while let Some(e) = frontier.pop() {
            for i in 0..group.generators().len() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let next = group.apply_letter(&e, Letter { generator: i, sign });
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        seen
    }

    fn sample_specs() -> Vec<GroupSpec> {
        vec![
            GroupSpec::Cyclic { m: 1 },
            GroupSpec::Cyclic { m: 5 },
            GroupSpec::Cyclic { m: 6 },
            GroupSpec::CyclicProduct { moduli: vec![2, 4] },
            GroupSpec::CyclicProduct { moduli: vec![3, 3] },
            GroupSpec::Dihedral { m: 4 },
            GroupSpec::Dihedral { m: 5 },
            GroupSpec::CoxeterA { rank: 1 },
            GroupSpec::CoxeterA { rank: 3 },
            GroupSpec::CoxeterB { rank: 2 },
            GroupSpec::CoxeterB { rank: 3 },
            GroupSpec::CoxeterD { rank: 4 },
            GroupSpec::CoxeterI2 { m: 3 },
            GroupSpec::CoxeterI2 { m: 7 },
            GroupSpec::CoxeterProduct {
                factors: vec![GroupSpec::CoxeterA { rank: 1 }, GroupSpec::CoxeterI2 { m: 3 }],
            },
        ]
    }

    #[test]
    fn orders_match_enumeration() {
        for spec in sample_specs() {
            let group = build_group(&spec).unwrap();
            let elements = enumerate(&group);
            assert_eq!(elements.len() as u64, group.order(), "spec {spec:?}");
        }
    }

    #[test]
    fn family_order_formulas() {
        let cases = [
            (GroupSpec::CoxeterA { rank: 3 }, 24),
            (GroupSpec::CoxeterA { rank: 4 }, 120),
            (GroupSpec::CoxeterB { rank: 3 }, 48),
            (GroupSpec::CoxeterB { rank: 4 }, 384),
            (GroupSpec::CoxeterD { rank: 4 }, 192),
            (GroupSpec::CoxeterI2 { m: 9 }, 18),
            (GroupSpec::Dihedral { m: 9 }, 18),
        ];
        for (spec, want) in cases {
            assert_eq!(build_group(&spec).unwrap().order(), want);
        }
    }

    #[test]
    fn group_axioms_exhaustive_small() {
        for spec in sample_specs() {
            let group = build_group(&spec).unwrap();
            if group.order() > 200 {
                continue;
            }
            let elements: Vec<Element> = enumerate(&group).into_iter().collect();
            let id = group.identity();
            for a in &elements {
                assert_eq!(group.multiply(a, &id), *a);
                assert_eq!(group.multiply(&id, a), *a);
                assert_eq!(group.multiply(a, &group.inverse(a)), id);
                group.validate_element(a).unwrap();
            }
            for a in &elements {
                for b in &elements {
                    for c in elements.iter().step_by(3) {
                        let left = group.multiply(&group.multiply(a, b), c);
                        let right = group.multiply(a, &group.multiply(b, c));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn coxeter_matrix_orders_realized() {
        // (s_i s_j)^{m(i,j)} must equal the identity in the concrete group.
        for spec in [
            GroupSpec::CoxeterA { rank: 3 },
            GroupSpec::CoxeterB { rank: 3 },
            GroupSpec::CoxeterD { rank: 4 },
            GroupSpec::CoxeterI2 { m: 5 },
        ] {
            let group = build_group(&spec).unwrap();
            let pres = presentation_of(&spec).unwrap();
            for relator in &pres.relators {
                assert_eq!(
                    group.evaluate_word(relator),
                    group.identity(),
                    "relator fails in {spec:?}"
                );
            }
        }
    }

    #[test]
    fn relators_hold_in_all_families() {
        for spec in sample_specs() {
            let group = build_group(&spec).unwrap();
            let pres = presentation_of(&spec).unwrap();
            assert_eq!(pres.generator_count, group.generators().len());
            for relator in &pres.relators {
                assert!(!relator.is_empty());
                assert_eq!(group.evaluate_word(relator), group.identity(), "{spec:?}");
            }
        }
    }

    #[test]
    fn odd_relator_detection() {
        assert!(has_odd_relator(
            &presentation_of(&GroupSpec::Cyclic { m: 5 }).unwrap()
        ));
        assert!(!has_odd_relator(
            &presentation_of(&GroupSpec::Cyclic { m: 4 }).unwrap()
        ));
        // All Coxeter relators have even length.
        assert!(!has_odd_relator(
            &presentation_of(&GroupSpec::CoxeterA { rank: 3 }).unwrap()
        ));
        // Dihedral(4): a^4, b^2, a b a b^{-1}.
        assert!(!has_odd_relator(
            &presentation_of(&GroupSpec::Dihedral { m: 4 }).unwrap()
        ));
        assert!(has_odd_relator(
            &presentation_of(&GroupSpec::Dihedral { m: 5 }).unwrap()
        ));
        for m in 2..=12u64 {
            let pres = presentation_of(&GroupSpec::Cyclic { m }).unwrap();
            assert_eq!(has_odd_relator(&pres), m % 2 == 1);
        }
    }

    #[test]
    fn presentation_examples() {
        let pres = presentation_of(&GroupSpec::Cyclic { m: 4 }).unwrap();
        assert_eq!(pres.generator_count, 1);
        assert_eq!(pres.relators.len(), 1);
        assert_eq!(pres.relators[0].len(), 4);

        let pres = presentation_of(&GroupSpec::CoxeterI2 { m: 3 }).unwrap();
        let lens: Vec<usize> = pres.relators.iter().map(Word::len).collect();
        assert_eq!(lens, vec![2, 2, 6]);

        let pres = presentation_of(&GroupSpec::CyclicProduct { moduli: vec![2, 4] }).unwrap();
        let lens: Vec<usize> = pres.relators.iter().map(Word::len).collect();
        assert_eq!(lens, vec![2, 4, 4]);
        assert_eq!(
            pres.relators[2].letters,
            vec![
                Letter::plus(0),
                Letter::plus(1),
                Letter::minus(0),
                Letter::minus(1)
            ]
        );
    }

    #[test]
    fn involutive_flags() {
        let group = build_group(&GroupSpec::CoxeterB { rank: 3 }).unwrap();
        assert!((0..3).all(|i| group.is_involutive(i)));
        let group = build_group(&GroupSpec::Cyclic { m: 5 }).unwrap();
        assert!(!group.is_involutive(0));
        let group = build_group(&GroupSpec::Cyclic { m: 2 }).unwrap();
        assert!(group.is_involutive(0));
        let group = build_group(&GroupSpec::Dihedral { m: 4 }).unwrap();
        assert!(!group.is_involutive(0));
        assert!(group.is_involutive(1));
    }

    #[test]
    fn cap_and_validation_errors() {
        assert!(matches!(
            build_group_with_cap(&GroupSpec::CoxeterA { rank: 9 }, 1000),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            build_group(&GroupSpec::CoxeterD { rank: 3 }),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            build_group(&GroupSpec::CyclicProduct { moduli: vec![2] }),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            build_group(&GroupSpec::CoxeterProduct { factors: vec![] }),
            Err(Error::InvalidSpec(_))
        ));
        // Products only admit irreducible Coxeter factors.
        assert!(matches!(
            build_group(&GroupSpec::CoxeterProduct {
                factors: vec![GroupSpec::Cyclic { m: 3 }]
            }),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn d4_even_sign_count_closure() {
        let group = build_group(&GroupSpec::CoxeterD { rank: 4 }).unwrap();
        for e in enumerate(&group) {
            if let Element::SignedPermutation(p) = &e {
                assert_eq!(p.iter().filter(|&&x| x < 0).count() % 2, 0);
            } else {
                panic!("wrong encoding");
            }
        }
    }
}
