//! Root systems, weights, dominance and Weyl groups for simple types.
//!
//! Conventions: the Cartan matrix is `a[i][j] = <α_i, α_j^∨>`, so row `i`
//! holds the fundamental-weight coordinates of the simple root `α_i`.
//! Weights live in fundamental-weight coordinates, roots in simple-root
//! coordinates. All indices are 0-based.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, to_i64, Q};

pub const MAX_RANK: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TypeLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            other => Err(Error::Config(format!("unknown type letter {other:?}"))),
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
    pub in_root_lattice: bool,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// A Weyl group element: a reduced word plus its action on weight coordinates.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Length of the stored word (reduced when produced by this module).
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, weight: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(weight).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    type_letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Matrix,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(t: TypeLetter, l: usize) -> Result<Vec<Vec<i64>>> {
    let bad = |reason: &str| Error::InvalidType {
        letter: t.to_string(),
        rank: l,
        reason: reason.into(),
    };
    if l == 0 || l > MAX_RANK {
        return Err(bad("rank must be between 1 and 6"));
    }
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, n: usize| {
        for i in 0..n.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match t {
        TypeLetter::A => chain(&mut a, l),
        TypeLetter::B => {
            if l < 2 {
                return Err(bad("type B needs rank >= 2"));
            }
            chain(&mut a, l);
            a[l - 2][l - 1] = -2;
        }
        TypeLetter::C => {
            if l < 2 {
                return Err(bad("type C needs rank >= 2"));
            }
            chain(&mut a, l);
            a[l - 1][l - 2] = -2;
        }
        TypeLetter::D => {
            if l < 4 {
                return Err(bad("type D needs rank >= 4"));
            }
            chain(&mut a, l - 1);
            a[l - 1][l - 3] = -1;
            a[l - 3][l - 1] = -1;
        }
        TypeLetter::E => {
            if l != 6 {
                return Err(bad("only E6 is within the rank cap"));
            }
            // Bourbaki labels 1-3, 3-4, 4-5, 5-6, 2-4.
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                a[i][j] = -1;
                a[j][i] = -1;
            }
        }
        TypeLetter::F => {
            if l != 4 {
                return Err(bad("type F exists only in rank 4"));
            }
            chain(&mut a, 4);
            a[1][2] = -2;
        }
        TypeLetter::G => {
            if l != 2 {
                return Err(bad("type G exists only in rank 2"));
            }
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    Ok(a)
}

impl RootSystem {
    pub fn new(type_letter: TypeLetter, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(type_letter, rank)?;
        let cartan_inverse = Matrix::from_i64(&cartan)
            .inverse()
            .expect("Cartan matrices of finite type are invertible");
        let positive_roots = root_string_closure(&cartan);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            type_letter,
            rank,
            cartan,
            cartan_inverse,
            positive_roots,
            root_index,
        })
    }

    pub fn type_letter(&self) -> TypeLetter {
        self.type_letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_letter, self.rank)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, simple roots first, then by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn height(&self, root: &[i64]) -> i64 {
        root.iter().sum()
    }

    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_root(&self, root: &[i64]) -> bool {
        if self.root_index.contains_key(root) {
            return true;
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, root: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| root[i] * self.cartan[i][j]).sum())
            .collect()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root(&self, weight: &[i64]) -> Vec<Q> {
        let w: Vec<Q> = weight.iter().map(|&x| q(x)).collect();
        self.cartan_inverse.vec_mul(&w)
    }

    pub fn weight_to_root_int(&self, weight: &[i64]) -> Option<Vec<i64>> {
        self.weight_to_root(weight).iter().map(to_i64).collect()
    }

    /// `<w, α_i^∨>` is the i-th coordinate; this pairs a weight with a coroot
    /// given in simple-coroot coordinates.
    pub fn weight(&self, coords: Vec<i64>) -> Weight {
        assert_eq!(coords.len(), self.rank);
        let in_root_lattice = self.weight_to_root_int(&coords).is_some();
        Weight {
            coords,
            in_root_lattice,
        }
    }

    pub fn weight_from_root(&self, root_coords: &[i64]) -> Weight {
        self.weight(self.root_to_weight(root_coords))
    }

    pub fn zero_weight(&self) -> Weight {
        self.weight(vec![0; self.rank])
    }

    pub fn rho(&self) -> Weight {
        self.weight(vec![1; self.rank])
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.coords.iter().all(|&x| x >= 0)
    }

    pub fn is_regular_dominant(&self, w: &Weight) -> bool {
        w.coords.iter().all(|&x| x > 0)
    }

    /// `μ ≤ λ` in the dominance order: `λ − μ` is a non-negative integer
    /// combination of simple roots.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        let diff: Vec<i64> = lambda
            .coords
            .iter()
            .zip(&mu.coords)
            .map(|(a, b)| a - b)
            .collect();
        match self.weight_to_root_int(&diff) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// All dominant `μ ≤ λ`, sorted by height of `λ − μ` descending from λ.
    ///
    /// Walks down from λ by subtracting positive roots while staying dominant;
    /// every dominant weight below λ is reachable this way.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        if !self.is_dominant(lambda) {
            return Err(Error::InvalidWeight {
                weight: lambda.coords.clone(),
                reason: "not dominant".into(),
            });
        }
        if !lambda.in_root_lattice {
            return Err(Error::InvalidWeight {
                weight: lambda.coords.clone(),
                reason: "not in the root lattice".into(),
            });
        }
        let root_weights: Vec<Vec<i64>> = self
            .positive_roots
            .iter()
            .map(|r| self.root_to_weight(r))
            .collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::from([lambda.coords.clone()]);
        seen.insert(lambda.coords.clone());
        while let Some(w) = queue.pop_front() {
            for rw in &root_weights {
                let next: Vec<i64> = w.iter().zip(rw).map(|(a, b)| a - b).collect();
                if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().map(|c| self.weight(c)).collect();
        out.sort_by_key(|w| {
            let d: Vec<i64> = lambda.coords.iter().zip(&w.coords).map(|(a, b)| a - b).collect();
            (self.weight_to_root_int(&d).map(|c| c.iter().sum::<i64>()).unwrap_or(0), w.coords.clone())
        });
        Ok(out)
    }

    /// `s_i` acting on weight coordinates: `λ ↦ λ − λ_i α_i`.
    pub fn simple_reflection(&self, i: usize) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut m = vec![vec![0i64; l]; l];
        for k in 0..l {
            m[k][k] = 1;
            m[k][i] -= self.cartan[i][k];
        }
        m
    }

    pub fn weyl_element(&self, word: &[usize]) -> WeylElement {
        let mut m = identity(self.rank);
        for &i in word {
            m = mat_mul(&m, &self.simple_reflection(i));
        }
        WeylElement {
            word: word.to_vec(),
            matrix: m,
        }
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        self.weyl_element(&word)
    }

    /// The image of a root (root coordinates) under `w`.
    pub fn act_on_root(&self, w: &WeylElement, root: &[i64]) -> Vec<i64> {
        let img = w.act(&self.root_to_weight(root));
        self.weight_to_root_int(&img)
            .expect("Weyl group preserves the root lattice")
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| self.act_on_root(w, r).iter().any(|&x| x < 0))
            .count()
    }

    /// Every Weyl group element, each with a shortest word (breadth-first).
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let gens: Vec<_> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
        let id = WeylElement {
            word: Vec::new(),
            matrix: identity(self.rank),
        };
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([id.matrix.clone()]);
        let mut out = Vec::new();
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&w.matrix, g);
                if seen.insert(m.clone()) {
                    let mut word = w.word.clone();
                    word.push(i);
                    queue.push_back(WeylElement { word, matrix: m });
                }
            }
            out.push(w);
        }
        out
    }

    /// The longest element of the parabolic subgroup `W_I`.
    pub fn longest_element(&self, subset: &[usize]) -> WeylElement {
        let mut word: Vec<usize> = Vec::new();
        loop {
            let w = self.weyl_element(&word);
            // w s_i is longer iff w(α_i) > 0
            let next = subset.iter().copied().find(|&i| {
                self.act_on_root(&w, &self.simple_root(i))
                    .iter()
                    .all(|&x| x >= 0)
            });
            match next {
                Some(i) => word.push(i),
                None => return w,
            }
        }
    }

    /// `Some(I)` iff every `w^{-1} α_i` is a positive root or a negative simple
    /// root; then `I` collects the indices of the second kind.
    pub fn parabolic_longest_test(&self, w: &WeylElement) -> Option<Vec<usize>> {
        let winv = self.inverse(w);
        let mut subset = Vec::new();
        for i in 0..self.rank {
            let img = self.act_on_root(&winv, &self.simple_root(i));
            if img.iter().all(|&x| x >= 0) {
                continue;
            }
            let neg: Vec<i64> = img.iter().map(|x| -x).collect();
            if neg.iter().sum::<i64>() == 1 {
                subset.push(i);
            } else {
                return None;
            }
        }
        Some(subset)
    }

    /// Indices of positive roots supported on `subset`.
    pub fn subsystem_roots(&self, subset: &[usize]) -> Vec<usize> {
        self.positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                r.iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || subset.contains(&k))
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Connected components of the Dynkin diagram restricted to `subset`.
    pub fn dynkin_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = subset.to_vec();
        remaining.sort_unstable();
        let mut comps = Vec::new();
        while let Some(start) = remaining.first().copied() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            remaining.retain(|&x| x != start);
            while let Some(v) = stack.pop() {
                let nbrs: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| self.cartan[v][u] != 0)
                    .collect();
                for u in nbrs {
                    remaining.retain(|&x| x != u);
                    comp.push(u);
                    stack.push(u);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Exponents of the Weyl group, increasing.
    pub fn exponents(&self) -> Vec<i64> {
        let l = self.rank as i64;
        let mut e: Vec<i64> = match self.type_letter {
            TypeLetter::A => (1..=l).collect(),
            TypeLetter::B | TypeLetter::C => (1..=l).map(|k| 2 * k - 1).collect(),
            TypeLetter::D => {
                let mut v: Vec<i64> = (1..l).map(|k| 2 * k - 1).collect();
                v.push(l - 1);
                v
            }
            TypeLetter::E => vec![1, 4, 5, 7, 8, 11],
            TypeLetter::F => vec![1, 5, 7, 11],
            TypeLetter::G => vec![1, 5],
        };
        e.sort_unstable();
        e
    }

    pub fn validate_subset(&self, subset: &[usize]) -> Result<()> {
        let distinct: BTreeSet<_> = subset.iter().collect();
        if subset.iter().any(|&i| i >= self.rank) || distinct.len() != subset.len() {
            return Err(Error::InvalidSubset {
                subset: subset.to_vec(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// `<λ, β^∨>`-free pairing: value of a weight on a Cartan element given in
    /// simple-coroot coordinates.
    pub fn pair_with_coroots(&self, weight: &[i64], coroot_coords: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (w, c) in weight.iter().zip(coroot_coords) {
            acc += q(*w) * c;
        }
        acc
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Positive roots from the root-string recursion: `β + α_i` is a root iff
/// `p − <β, α_i^∨> > 0`, where `p` is the largest `k` with `β − kα_i` a root.
fn root_string_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let pairing = |root: &[i64], i: usize| -> i64 { (0..l).map(|j| root[j] * cartan[j][i]).sum() };
    let mut roots: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next_level = Vec::new();
        for beta in &frontier {
            for i in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next_level.push(up);
                    }
                }
            }
        }
        next_level.sort();
        roots.extend(next_level.iter().cloned());
        frontier = next_level;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_types() {
        assert!(RootSystem::new(TypeLetter::G, 3).is_err());
        assert!(RootSystem::new(TypeLetter::D, 3).is_err());
        assert!(RootSystem::new(TypeLetter::A, 7).is_err());
        assert!(RootSystem::new(TypeLetter::E, 7).is_err());
        assert!(RootSystem::new(TypeLetter::B, 1).is_err());
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::new(TypeLetter::A, 1).unwrap();
        assert_eq!(rs.cartan_matrix(), &[vec![2]]);
        assert_eq!(rs.num_positive_roots(), 1);
    }

    #[test]
    fn g2_cartan_and_roots() {
        let rs = RootSystem::new(TypeLetter::G, 2).unwrap();
        assert_eq!(rs.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs.num_positive_roots(), 6);
        assert_eq!(rs.highest_root(), &[3, 2]);
    }

    #[test]
    fn longest_of_empty_subset_is_identity() {
        let rs = RootSystem::new(TypeLetter::B, 2).unwrap();
        assert!(rs.longest_element(&[]).is_identity());
        assert_eq!(rs.parabolic_longest_test(&rs.longest_element(&[])), Some(vec![]));
    }

    #[test]
    fn dominant_below_requires_root_lattice() {
        let rs = RootSystem::new(TypeLetter::A, 2).unwrap();
        let omega1 = rs.weight(vec![1, 0]);
        assert!(!omega1.in_root_lattice);
        assert!(rs.dominant_weights_below(&omega1).is_err());
        let neg = rs.weight(vec![-1, 2]);
        assert!(rs.dominant_weights_below(&neg).is_err());
    }

    #[test]
    fn dynkin_components_of_a3() {
        let rs = RootSystem::new(TypeLetter::A, 3).unwrap();
        assert_eq!(rs.dynkin_components(&[0, 2]), vec![vec![0], vec![2]]);
        assert_eq!(rs.dynkin_components(&[0, 1]), vec![vec![0, 1]]);
        assert!(rs.dynkin_components(&[]).is_empty());
    }
}
