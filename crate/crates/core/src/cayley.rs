//! Cayley graph enumeration: BFS length function, reduced-word witnesses,
//! bipartiteness, and exact parity-split sums.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::{ConcreteGroup, Element, Letter, Word};

/// The Cayley graph of a concrete group, rooted at the identity.
///
/// Vertices are indexed in BFS discovery order (index 0 is the identity),
/// with letters expanded in the fixed order `(s1, +), (s1, -), (s2, +), ...`
/// (the minus letter only for non-involutive generators). With a FIFO queue
/// this discovery order makes every parent chain the lexicographically
/// smallest reduced word for its vertex.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    group: ConcreteGroup,
    elements: Vec<Element>,
    index: BTreeMap<Element, u32>,
    letters: Vec<Letter>,
    /// `targets[v * letters.len() + l]` is the endpoint of the edge from
    /// `v` along letter `l`.
    targets: Vec<u32>,
    distance: Vec<u32>,
    parent: Vec<Option<(u32, Letter)>>,
    bipartite: bool,
}

/// Enumerates the full Cayley graph of `group` by BFS from the identity.
pub fn build_cayley(group: &ConcreteGroup) -> Result<CayleyGraph> {
    let order = group.order() as usize;
    let letters = letter_order(group);
    let letter_count = letters.len();

    let mut elements = Vec::with_capacity(order);
    let mut index = BTreeMap::new();
    let mut distance = Vec::with_capacity(order);
    let mut parent: Vec<Option<(u32, Letter)>> = Vec::with_capacity(order);
    let mut targets = vec![u32::MAX; order * letter_count];

    let identity = group.identity();
    elements.push(identity.clone());
    index.insert(identity, 0u32);
    distance.push(0);
    parent.push(None);

    let mut queue = VecDeque::new();
    queue.push_back(0u32);
    while let Some(v) = queue.pop_front() {
        let from = elements[v as usize].clone();
        for (li, &letter) in letters.iter().enumerate() {
            let to = group.apply_letter(&from, letter);
            let w = match index.get(&to) {
                Some(&w) => w,
                None => {
                    let w = elements.len() as u32;
                    elements.push(to.clone());
                    index.insert(to, w);
                    distance.push(distance[v as usize] + 1);
                    parent.push(Some((v, letter)));
                    queue.push_back(w);
                    w
                }
            };
            targets[v as usize * letter_count + li] = w;
        }
    }

    debug_assert_eq!(elements.len(), order, "Cayley graph must be connected");

    // Bipartite iff no edge joins two vertices at equal BFS depth.
    let bipartite = (0..elements.len()).all(|v| {
        (0..letter_count).all(|li| {
            let w = targets[v * letter_count + li] as usize;
            distance[v] != distance[w]
        })
    });

    Ok(CayleyGraph {
        group: group.clone(),
        elements,
        index,
        letters,
        targets,
        distance,
        parent,
        bipartite,
    })
}

/// Distinct letters of S and S^{-1} in expansion order; involutive
/// generators contribute a single letter.
fn letter_order(group: &ConcreteGroup) -> Vec<Letter> {
    let mut letters = Vec::new();
    for i in 0..group.generators().len() {
        letters.push(Letter::plus(i));
        if !group.is_involutive(i) {
            letters.push(Letter::minus(i));
        }
    }
    letters
}

impl CayleyGraph {
    pub fn group(&self) -> &ConcreteGroup {
        &self.group
    }

    pub fn vertex_count(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, v: u32) -> &Element {
        &self.elements[v as usize]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, g: &Element) -> Result<u32> {
        self.index.get(g).copied().ok_or(Error::UnknownElement)
    }

    /// Letters in expansion order, shared with every `StepDistribution`
    /// built for the same group.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Endpoint of the edge from `v` along letter index `li`.
    #[inline]
    pub fn target(&self, v: u32, li: usize) -> u32 {
        self.targets[v as usize * self.letters.len() + li]
    }

    #[inline]
    pub fn distance(&self, v: u32) -> u32 {
        self.distance[v as usize]
    }

    pub fn distances(&self) -> &[u32] {
        &self.distance
    }

    pub fn max_distance(&self) -> u32 {
        self.distance.iter().copied().max().unwrap_or(0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// Word length of `g`: BFS distance from the identity.
    pub fn length_of(&self, g: &Element) -> Result<u32> {
        Ok(self.distance(self.index_of(g)?))
    }

    /// The lexicographically smallest reduced word for `g`, rebuilt from
    /// the BFS parent chain.
    pub fn reduced_word(&self, g: &Element) -> Result<Word> {
        let mut v = self.index_of(g)?;
        let mut letters = Vec::with_capacity(self.distance(v) as usize);
        while let Some((pred, letter)) = self.parent[v as usize] {
            letters.push(letter);
            v = pred;
        }
        letters.reverse();
        Ok(Word::new(letters))
    }

    /// Number of vertices whose length has the given parity.
    pub fn parity_class_size(&self, odd: bool) -> usize {
        self.distance
            .iter()
            .filter(|&&d| (d % 2 == 1) == odd)
            .count()
    }

    /// Exact sums of `f` over the even-length class, the odd-length class,
    /// and the whole group.
    pub fn parity_sums(
        &self,
        mut f: impl FnMut(u32, &Element) -> BigRational,
    ) -> (BigRational, BigRational, BigRational) {
        let zero = || BigRational::from_integer(BigInt::from(0));
        let mut even = zero();
        let mut odd = zero();
        for (v, e) in self.elements.iter().enumerate() {
            let value = f(v as u32, e);
            if self.distance[v] % 2 == 0 {
                even += value;
            } else {
                odd += value;
            }
        }
        let total = even.clone() + odd.clone();
        (even, odd, total)
    }

    /// Length functional, for use with [`CayleyGraph::parity_sums`] and the
    /// walk reports.
    pub fn length_functional(&self) -> impl Fn(u32, &Element) -> BigRational + '_ {
        move |v, _| BigRational::from_integer(BigInt::from(self.distance(v)))
    }

    /// Length-generating polynomial coefficients: entry `l` counts the
    /// elements of length `l`.
    pub fn length_histogram(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_distance() as usize + 1];
        for &d in &self.distance {
            counts[d as usize] += 1;
        }
        counts
    }

    /// All directed edges as `(from, to, letter)` triples in expansion
    /// order, for dumps and invariant checks.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, Letter)> + '_ {
        let l = self.letters.len();
        (0..self.elements.len()).flat_map(move |v| {
            (0..l).map(move |li| (v as u32, self.targets[v * l + li], self.letters[li]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, has_odd_relator, presentation_of, GroupSpec, Sign};

    fn graph(spec: &GroupSpec) -> CayleyGraph {
        build_cayley(&build_group(spec).unwrap()).unwrap()
    }

    /// Inversion count of a one-line permutation; equals the Coxeter length
    /// in type A.
    fn inversions(p: &[u8]) -> u32 {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    fn test_specs() -> Vec<GroupSpec> {
        vec![
            GroupSpec::Cyclic { m: 5 },
            GroupSpec::Cyclic { m: 6 },
            GroupSpec::Cyclic { m: 8 },
            GroupSpec::CyclicProduct { moduli: vec![2, 4] },
            GroupSpec::CyclicProduct { moduli: vec![3, 3] },
            GroupSpec::Dihedral { m: 4 },
            GroupSpec::Dihedral { m: 5 },
            GroupSpec::CoxeterA { rank: 2 },
            GroupSpec::CoxeterA { rank: 3 },
            GroupSpec::CoxeterB { rank: 3 },
            GroupSpec::CoxeterD { rank: 4 },
            GroupSpec::CoxeterI2 { m: 5 },
            GroupSpec::CoxeterI2 { m: 6 },
            GroupSpec::CoxeterProduct {
                factors: vec![GroupSpec::CoxeterA { rank: 1 }, GroupSpec::CoxeterI2 { m: 3 }],
            },
        ]
    }

    #[test]
    fn cyclic_distances() {
        let g = graph(&GroupSpec::Cyclic { m: 6 });
        let by_residue: Vec<u32> = (0..6u32)
            .map(|r| g.length_of(&Element::Residues(vec![r])).unwrap())
            .collect();
        assert_eq!(by_residue, vec![0, 1, 2, 3, 2, 1]);

        let g = graph(&GroupSpec::Cyclic { m: 7 });
        assert_eq!(g.length_of(&Element::Residues(vec![4])).unwrap(), 3);
    }

    #[test]
    fn a2_is_hexagon() {
        let g = graph(&GroupSpec::CoxeterA { rank: 2 });
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.max_distance(), 3);
        assert_eq!(g.length_histogram(), vec![1, 2, 2, 1]);
        // Each vertex of the 6-cycle has exactly two distinct neighbors,
        // one per generator.
        for v in 0..6 {
            let mut nbrs: Vec<u32> = (0..2).map(|li| g.target(v, li)).collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            assert_eq!(nbrs.len(), 2);
        }
    }

    #[test]
    fn a3_max_distance_is_inversion_bound() {
        let g = graph(&GroupSpec::CoxeterA { rank: 3 });
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.max_distance(), 6);
    }

    #[test]
    fn type_a_length_equals_inversions() {
        for rank in 1..=5u32 {
            let g = graph(&GroupSpec::CoxeterA { rank });
            for v in 0..g.vertex_count() as u32 {
                match g.element(v) {
                    Element::Permutation(p) => assert_eq!(g.distance(v), inversions(p)),
                    _ => panic!("wrong encoding"),
                }
            }
        }
    }

    #[test]
    fn identity_has_length_zero_and_empty_word() {
        for spec in test_specs() {
            let g = graph(&spec);
            let id = g.group().identity();
            assert_eq!(g.length_of(&id).unwrap(), 0);
            assert!(g.reduced_word(&id).unwrap().is_empty());
        }
    }

    #[test]
    fn reduced_words_replay_to_element() {
        for spec in test_specs() {
            let g = graph(&spec);
            for v in 0..g.vertex_count() as u32 {
                let e = g.element(v).clone();
                let word = g.reduced_word(&e).unwrap();
                assert_eq!(word.len() as u32, g.distance(v));
                assert_eq!(g.group().evaluate_word(&word), e, "{spec:?}");
            }
        }
    }

    #[test]
    fn lex_min_reduced_word_for_a2_antipode() {
        let g = graph(&GroupSpec::CoxeterA { rank: 2 });
        let antipode = Element::Permutation(vec![3, 2, 1]);
        assert_eq!(g.length_of(&antipode).unwrap(), 3);
        let word = g.reduced_word(&antipode).unwrap();
        let gens: Vec<usize> = word.letters.iter().map(|l| l.generator).collect();
        assert_eq!(gens, vec![0, 1, 0]); // s1 s2 s1, not s2 s1 s2
    }

    #[test]
    fn inverse_only_witness_in_cyclic_8() {
        let g = graph(&GroupSpec::Cyclic { m: 8 });
        let word = g.reduced_word(&Element::Residues(vec![5])).unwrap();
        assert_eq!(word.len(), 3);
        assert!(word
            .letters
            .iter()
            .all(|l| l.generator == 0 && l.sign == Sign::Minus));
    }

    #[test]
    fn edge_distances_differ_by_at_most_one() {
        for spec in test_specs() {
            let g = graph(&spec);
            for (v, w, _) in g.edges() {
                let dv = g.distance(v) as i64;
                let dw = g.distance(w) as i64;
                assert!((dv - dw).abs() <= 1);
                if g.is_bipartite() {
                    assert_eq!((dv - dw).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn bipartite_iff_no_odd_relator() {
        for spec in test_specs() {
            let g = graph(&spec);
            let pres = presentation_of(&spec).unwrap();
            assert_eq!(g.is_bipartite(), !has_odd_relator(&pres), "{spec:?}");
        }
    }

    #[test]
    fn bipartite_parity_classes_equal_size() {
        for spec in test_specs() {
            let g = graph(&spec);
            if g.is_bipartite() {
                assert_eq!(g.parity_class_size(false), g.parity_class_size(true));
            }
        }
    }

    #[test]
    fn bipartite_examples() {
        assert!(graph(&GroupSpec::CoxeterA { rank: 3 }).is_bipartite());
        assert!(!graph(&GroupSpec::Cyclic { m: 5 }).is_bipartite());
        assert!(graph(&GroupSpec::Dihedral { m: 4 }).is_bipartite());
    }

    #[test]
    fn parity_sum_examples() {
        let g = graph(&GroupSpec::CoxeterA { rank: 2 });
        let (even, odd, total) = g.parity_sums(g.length_functional());
        assert_eq!(even, crate::ratio(4, 1));
        assert_eq!(odd, crate::ratio(5, 1));
        assert_eq!(total, crate::ratio(9, 1));

        let g = graph(&GroupSpec::Cyclic { m: 4 });
        let (even, odd, total) = g.parity_sums(g.length_functional());
        assert_eq!(even, crate::ratio(2, 1));
        assert_eq!(odd, crate::ratio(2, 1));
        assert_eq!(total, crate::ratio(4, 1));

        // f = 1 splits a bipartite graph into equal halves.
        let g = graph(&GroupSpec::CoxeterB { rank: 3 });
        let one = |_: u32, _: &Element| crate::ratio(1, 1);
        let (even, odd, total) = g.parity_sums(one);
        assert_eq!(even, crate::ratio(24, 1));
        assert_eq!(odd, crate::ratio(24, 1));
        assert_eq!(total, crate::ratio(48, 1));
    }

    #[test]
    fn unknown_element_rejected() {
        let g = graph(&GroupSpec::CoxeterA { rank: 2 });
        let foreign = Element::Permutation(vec![1, 2, 3, 4]);
        assert!(matches!(g.length_of(&foreign), Err(Error::UnknownElement)));
    }
}
