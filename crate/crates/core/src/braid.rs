//! Braid words over Artin generators, reduced-word lifts from Coxeter
//! groups, closure component counts, and the limiting component
//! expectations for closed random braids.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::group::{Element, Sign};
use crate::limits::IntPolynomial;

/// One braid letter: generator index `1..strands` with a crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    /// Signed-integer form: `k` encodes the k-th generator, `-k` its
    /// inverse.
    pub fn to_int(self) -> i64 {
        match self.sign {
            Sign::Plus => self.index as i64,
            Sign::Minus => -(self.index as i64),
        }
    }

    pub fn is_inverse_of(self, other: BraidLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidSpec("braids need at least two strands".to_string()));
        }
        for l in &letters {
            if l.index < 1 || l.index >= strands {
                return Err(Error::InvalidSpec(format_letter_error(l.index, strands)));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses the signed-integer list form, e.g. `[1, -2, 4, 4, 6]`.
    pub fn from_ints(strands: usize, ints: &[i64]) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&k| {
                if k == 0 {
                    Err(Error::InvalidSpec("braid letters must be nonzero".to_string()))
                } else {
                    Ok(BraidLetter {
                        index: k.unsigned_abs() as usize,
                        sign: if k > 0 { Sign::Plus } else { Sign::Minus },
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::InvalidSpec("strand counts differ".to_string()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(self.strands, letters)
    }
}

fn format_letter_error(index: usize, strands: usize) -> alloc::string::String {
    use alloc::format;
    format!("letter index {index} out of range for {strands} strands")
}

/// A permutation of `1..=n` in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[(x - 1) as usize] {
                return Err(Error::InvalidSpec("not a permutation".to_string()));
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    /// Function composition `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    /// Number of cycles in the cycle decomposition, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = (self.images[at] - 1) as usize;
            }
        }
        cycles
    }

    /// Length (inversion) parity; the sign of the permutation is
    /// `(-1)^inversions`.
    pub fn inversion_parity(&self) -> bool {
        let mut inv = 0usize;
        for i in 0..self.images.len() {
            for j in (i + 1)..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }
}

/// Lifts a group element to a braid word via its lexicographically
/// smallest reduced expression: each Coxeter letter `s_i` maps to the
/// positive Artin letter with the same index, so the braid length equals
/// the Coxeter length.
///
/// Only graphs of Coxeter families admit the lift; type A over `n` strands
/// produces honest braid-group words, the other types produce abstract
/// Artin-Tits words with the same letter encoding.
pub fn lift_to_braid(graph: &CayleyGraph, g: &Element) -> Result<BraidWord> {
    if !graph.group().spec().is_coxeter() {
        return Err(Error::InvalidSpec(
            "braid lift requires a Coxeter-family graph".to_string(),
        ));
    }
    let word = graph.reduced_word(g)?;
    let strands = graph.group().generators().len() + 1;
    let letters = word
        .letters
        .iter()
        .map(|l| {
            debug_assert_eq!(l.sign, Sign::Plus, "Coxeter letters are involutive");
            BraidLetter { index: l.generator + 1, sign: Sign::Plus }
        })
        .collect();
    BraidWord::new(strands, letters)
}

/// Cancels adjacent inverse pairs until none remain. Word-level only; no
/// braid moves are applied.
pub fn free_reduce(b: &BraidWord) -> BraidWord {
    let mut stack: Vec<BraidLetter> = Vec::with_capacity(b.letters.len());
    for &letter in &b.letters {
        if stack.last().is_some_and(|&top| top.is_inverse_of(letter)) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    BraidWord { strands: b.strands, letters: stack }
}

/// Projects a braid word to its underlying permutation: every letter acts
/// as the transposition `(i, i+1)` regardless of sign, and letters compose
/// in word order.
pub fn underlying_permutation(b: &BraidWord) -> Permutation {
    // Right-multiplying by (i, i+1) swaps the one-line entries at
    // positions i, i+1, so the fold stays O(1) per letter.
    let mut images: Vec<u32> = (1..=b.strands as u32).collect();
    for letter in &b.letters {
        images.swap(letter.index - 1, letter.index);
    }
    Permutation { images }
}

/// Components of the closure of a braid: the cycle count (fixed points
/// included) of the underlying permutation.
pub fn closure_components(b: &BraidWord) -> usize {
    underlying_permutation(b).cycle_count()
}

/// The cycle-count generating polynomial over all permutations of n:
/// `F(x) = x (x+1) ... (x+n-1)`, whose coefficients are the unsigned
/// Stirling numbers of the first kind.
pub fn cycle_count_polynomial(n: u32) -> IntPolynomial {
    let mut poly = IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()]); // x
    for k in 1..n as u64 {
        let shift = IntPolynomial::from_coeffs(vec![BigInt::from(k), BigInt::one()]);
        poly = poly.mul(&shift);
    }
    if n == 0 {
        IntPolynomial::one()
    } else {
        poly
    }
}

/// Harmonic number `H_n` as an exact rational.
pub fn harmonic(n: u64) -> BigRational {
    (1..=n)
        .map(|k| BigRational::new(BigInt::one(), BigInt::from(k)))
        .sum()
}

/// Limiting expected component counts of the closed braid along even and
/// odd step counts: `H_n +- (-1)^n / (n (n-1))`, the even class taking +.
///
/// The sign orientation is pinned by exhaustive enumeration over small
/// symmetric groups (see the tests), not assumed.
pub fn component_limits(n: u64) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::InvalidSpec("component limits need n >= 2".to_string()));
    }
    let h = harmonic(n);
    let magnitude = BigRational::new(BigInt::one(), BigInt::from(n * (n - 1)));
    let correction = if n % 2 == 0 { magnitude } else { -magnitude };
    Ok((h.clone() + correction.clone(), h - correction))
}

/// Stacks braid words into block-diagonal form: word k acts on its own
/// band of strands, shifted past all earlier words, so any two blocks
/// commute and closure components add.
pub fn block_diagonal_compose(words: &[BraidWord]) -> Result<BraidWord> {
    if words.is_empty() {
        return Err(Error::InvalidSpec("nothing to compose".to_string()));
    }
    let strands = words.iter().map(BraidWord::strands).sum();
    let mut letters = Vec::with_capacity(words.iter().map(BraidWord::len).sum());
    let mut offset = 0usize;
    for word in words {
        letters.extend(word.letters().iter().map(|l| BraidLetter {
            index: l.index + offset,
            sign: l.sign,
        }));
        offset += word.strands();
    }
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::build_cayley;
    use crate::group::{build_group, GroupSpec};
    use crate::ratio;
    use crate::rng::Xoshiro256StarStar;

    fn braid(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    /// All permutations of 1..=n by Heap's algorithm; independent of the
    /// group machinery.
    fn all_permutations(n: usize) -> Vec<Vec<u32>> {
        let mut items: Vec<u32> = (1..=n as u32).collect();
        let mut out = Vec::new();
        fn heap(k: usize, items: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k <= 1 {
                out.push(items.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, items, out);
                if k % 2 == 0 {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }
        heap(n, &mut items, &mut out);
        out
    }

    #[test]
    fn lift_examples() {
        let graph = build_cayley(&build_group(&GroupSpec::CoxeterA { rank: 2 }).unwrap()).unwrap();
        let id = graph.group().identity();
        assert!(lift_to_braid(&graph, &id).unwrap().is_empty());

        let antipode = Element::Permutation(vec![3, 2, 1]);
        let lifted = lift_to_braid(&graph, &antipode).unwrap();
        assert_eq!(lifted.to_ints(), vec![1, 2, 1]);
        assert_eq!(lifted.strands(), 3);
    }

    #[test]
    fn lift_preserves_length_exhaustively() {
        for spec in [
            GroupSpec::CoxeterA { rank: 3 },
            GroupSpec::CoxeterB { rank: 3 },
            GroupSpec::CoxeterI2 { m: 7 },
        ] {
            let graph = build_cayley(&build_group(&spec).unwrap()).unwrap();
            for v in 0..graph.vertex_count() as u32 {
                let e = graph.element(v).clone();
                let lifted = lift_to_braid(&graph, &e).unwrap();
                assert_eq!(lifted.len() as u32, graph.distance(v), "{spec:?}");
            }
        }
    }

    #[test]
    fn lift_rejects_non_coxeter() {
        let graph = build_cayley(&build_group(&GroupSpec::Cyclic { m: 5 }).unwrap()).unwrap();
        let id = graph.group().identity();
        assert!(lift_to_braid(&graph, &id).is_err());
    }

    #[test]
    fn free_reduce_examples() {
        assert!(free_reduce(&braid(3, &[1, -1])).is_empty());
        assert_eq!(free_reduce(&braid(3, &[1, -2, 2, 1])).to_ints(), vec![1, 1]);
        assert_eq!(free_reduce(&braid(3, &[1, 2, 1])).to_ints(), vec![1, 2, 1]);
        // Cancellation cascades through the stack.
        assert!(free_reduce(&braid(4, &[3, 1, -1, -3])).is_empty());
    }

    #[test]
    fn underlying_permutation_examples() {
        let p = underlying_permutation(&braid(3, &[]));
        assert_eq!(p, Permutation::identity(3));

        // sigma_1 sigma_2 closes the 3-cycle 1 -> 2 -> 3 -> 1.
        let p = underlying_permutation(&braid(3, &[1, 2]));
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.apply(3), 1);

        let p = underlying_permutation(&braid(3, &[1, 1]));
        assert_eq!(p, Permutation::identity(3));
    }

    #[test]
    fn permutation_projection_is_sign_blind() {
        assert_eq!(
            underlying_permutation(&braid(4, &[1, -2, 3])),
            underlying_permutation(&braid(4, &[1, 2, 3]))
        );
    }

    #[test]
    fn projection_is_a_homomorphism_randomized() {
        let mut rng = Xoshiro256StarStar::seed_from_u64(2024);
        let strands = 5;
        for _ in 0..10_000 {
            let len_u = rng.next_below(8) as usize;
            let len_v = rng.next_below(8) as usize;
            let rand_word = |rng: &mut Xoshiro256StarStar, len: usize| {
                let ints: Vec<i64> = (0..len)
                    .map(|_| {
                        let idx = rng.next_below(strands as u64 - 1) as i64 + 1;
                        if rng.next_below(2) == 0 {
                            idx
                        } else {
                            -idx
                        }
                    })
                    .collect();
                braid(strands, &ints)
            };
            let u = rand_word(&mut rng, len_u);
            let v = rand_word(&mut rng, len_v);
            let uv = u.concat(&v).unwrap();
            assert_eq!(
                underlying_permutation(&uv),
                underlying_permutation(&u).compose(&underlying_permutation(&v))
            );
        }
    }

    #[test]
    fn closure_component_examples() {
        assert_eq!(closure_components(&braid(5, &[])), 5);
        assert_eq!(closure_components(&braid(3, &[1, 2])), 1);
        // The trefoil: sigma_1^3 on two strands closes to one component.
        assert_eq!(closure_components(&braid(2, &[1, 1, 1])), 1);
    }

    #[test]
    fn cycle_count_polynomial_examples() {
        assert_eq!(
            cycle_count_polynomial(3),
            IntPolynomial::from_u64_coeffs(&[0, 2, 3, 1])
        );
        assert_eq!(cycle_count_polynomial(1), IntPolynomial::from_u64_coeffs(&[0, 1]));
        // F(1) = n! and F'(1) = n! H_n.
        let f = cycle_count_polynomial(3);
        assert_eq!(f.eval_int(&BigInt::one()), BigInt::from(6));
        assert_eq!(f.derivative_eval_int(&BigInt::one()), BigInt::from(11));
    }

    #[test]
    fn cycle_polynomial_counts_permutations() {
        for n in 1..=7usize {
            let f = cycle_count_polynomial(n as u32);
            let mut counts = vec![0u64; n + 1];
            for images in all_permutations(n) {
                let c = Permutation::from_images(images).unwrap().cycle_count();
                counts[c] += 1;
            }
            assert_eq!(f, IntPolynomial::from_u64_coeffs(&counts), "n = {n}");
        }
    }

    #[test]
    fn component_limit_examples() {
        assert_eq!(component_limits(3).unwrap(), (ratio(5, 3), ratio(2, 1)));
        assert_eq!(component_limits(2).unwrap(), (ratio(2, 1), ratio(1, 1)));
        assert_eq!(component_limits(4).unwrap(), (ratio(13, 6), ratio(2, 1)));
        assert!(component_limits(1).is_err());
    }

    #[test]
    fn component_limits_certified_by_enumeration() {
        // Parity-class averages of the cycle count over S_n, enumerated
        // independently of any closed form.
        for n in 2..=7usize {
            let mut even_sum = 0u64;
            let mut even_count = 0u64;
            let mut odd_sum = 0u64;
            let mut odd_count = 0u64;
            for images in all_permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                let c = p.cycle_count() as u64;
                if p.inversion_parity() {
                    odd_sum += c;
                    odd_count += 1;
                } else {
                    even_sum += c;
                    even_count += 1;
                }
            }
            let (even, odd) = component_limits(n as u64).unwrap();
            assert_eq!(
                even,
                BigRational::new(BigInt::from(even_sum), BigInt::from(even_count)),
                "even class, n = {n}"
            );
            assert_eq!(
                odd,
                BigRational::new(BigInt::from(odd_sum), BigInt::from(odd_count)),
                "odd class, n = {n}"
            );
        }
    }

    #[test]
    fn length_and_cycle_parity_agree() {
        // parity(l(w)) == parity(n - c(w)) for all w.
        for n in 2..=7usize {
            for images in all_permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                let lhs = p.inversion_parity();
                let rhs = (n - p.cycle_count()) % 2 == 1;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn signed_cycle_sum_identity() {
        // sum over S_n of c(w) (-1)^{l(w)} = (-1)^n (n-2)!.
        fn factorial(k: usize) -> i64 {
            (1..=k as i64).product()
        }
        for n in 2..=7usize {
            let mut sum = 0i64;
            for images in all_permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                let c = p.cycle_count() as i64;
                sum += if p.inversion_parity() { -c } else { c };
            }
            let expected = if n % 2 == 0 {
                factorial(n - 2)
            } else {
                -factorial(n - 2)
            };
            assert_eq!(sum, expected, "n = {n}");
        }
    }

    #[test]
    fn block_compose_examples() {
        let w1 = braid(3, &[1, -2]);
        let w2 = braid(2, &[1, 1]);
        let w3 = braid(2, &[1]);
        let composed = block_diagonal_compose(&[w1.clone(), w2.clone(), w3.clone()]).unwrap();
        assert_eq!(composed.strands(), 7);
        assert_eq!(composed.to_ints(), vec![1, -2, 4, 4, 6]);
        assert_eq!(
            closure_components(&composed),
            closure_components(&w1) + closure_components(&w2) + closure_components(&w3)
        );

        let single = block_diagonal_compose(&[w1.clone()]).unwrap();
        assert_eq!(single, w1);

        let empties =
            block_diagonal_compose(&[braid(2, &[]), braid(2, &[])]).unwrap();
        assert_eq!(empties.strands(), 4);
        assert!(empties.is_empty());
    }

    #[test]
    fn block_compose_components_add_randomized() {
        let mut rng = Xoshiro256StarStar::seed_from_u64(77);
        for _ in 0..500 {
            let count = rng.next_below(3) as usize + 2;
            let words: Vec<BraidWord> = (0..count)
                .map(|_| {
                    let strands = rng.next_below(4) as usize + 2;
                    let len = rng.next_below(6) as usize;
                    let ints: Vec<i64> = (0..len)
                        .map(|_| {
                            let idx = rng.next_below(strands as u64 - 1) as i64 + 1;
                            if rng.next_below(2) == 0 {
                                idx
                            } else {
                                -idx
                            }
                        })
                        .collect();
                    braid(strands, &ints)
                })
                .collect();
            let composed = block_diagonal_compose(&words).unwrap();
            let total: usize = words.iter().map(closure_components).sum();
            assert_eq!(closure_components(&composed), total);
            assert_eq!(composed.len(), words.iter().map(BraidWord::len).sum());
        }
    }

    #[test]
    fn invalid_words_rejected() {
        assert!(BraidWord::from_ints(3, &[3]).is_err());
        assert!(BraidWord::from_ints(3, &[0]).is_err());
        assert!(BraidWord::from_ints(1, &[]).is_err());
    }
}
