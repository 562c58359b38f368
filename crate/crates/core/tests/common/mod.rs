//! Independent oracles. Nothing here calls into the library's root data,
//! module construction or linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Simple roots as vectors in a Euclidean space.
pub fn euclidean_simple_roots(letter: char, rank: usize) -> Vec<Vec<i64>> {
    let unit = |n: usize, i: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let diff = |n: usize, i: usize, j: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[i] = 1;
        v[j] = -1;
        v
    };
    match letter {
        'A' => (0..rank).map(|i| diff(rank + 1, i, i + 1)).collect(),
        'B' => {
            let mut r: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            r.push(unit(rank, rank - 1));
            r
        }
        'C' => {
            let mut r: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            r.push(unit(rank, rank - 1).iter().map(|x| 2 * x).collect());
            r
        }
        'D' => {
            let mut r: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            let mut last = vec![0; rank];
            last[rank - 2] = 1;
            last[rank - 1] = 1;
            r.push(last);
            r
        }
        'G' => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        'F' => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        _ => panic!("no Euclidean model for {letter}{rank}"),
    }
}

fn ip(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a_ij = 2(α_i, α_j)/(α_j, α_j)` from the Euclidean model.
pub fn cartan_from_euclid(letter: char, rank: usize) -> Vec<Vec<i64>> {
    let r = euclidean_simple_roots(letter, rank);
    (0..rank)
        .map(|i| (0..rank).map(|j| 2 * ip(&r[i], &r[j]) / ip(&r[j], &r[j])).collect())
        .collect()
}

/// Gram matrix `(α_i, α_j)` of the simple roots.
pub fn gram(letter: char, rank: usize) -> Vec<Vec<i64>> {
    let r = euclidean_simple_roots(letter, rank);
    (0..rank)
        .map(|i| (0..rank).map(|j| ip(&r[i], &r[j])).collect())
        .collect()
}

/// Positive roots by closing the simple roots under simple reflections.
pub fn reflection_closure_roots(cartan: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let l = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|k| i64::from(k == i)).collect())
        .collect();
    while let Some(beta) = frontier.pop() {
        if !all.insert(beta.clone()) {
            continue;
        }
        for i in 0..l {
            // <β, α_i^∨> = Σ_j β_j a_ji
            let pairing: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if !all.contains(&image) {
                frontier.push(image);
            }
        }
    }
    all.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect()
}

/// Small exact Gauss–Jordan inverse.
pub fn inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let inv = Q::one() / a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Weight data for the Weyl and Freudenthal formulas.
pub struct WeightOracle {
    pub cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Q>>,
    /// Root coordinates of the fundamental weights.
    fund: Vec<Vec<Q>>,
    pub positive_roots: Vec<Vec<i64>>,
}

impl WeightOracle {
    pub fn new(letter: char, rank: usize) -> Self {
        let cartan = cartan_from_euclid(letter, rank);
        let gram: Vec<Vec<Q>> = gram(letter, rank)
            .into_iter()
            .map(|r| r.into_iter().map(q).collect())
            .collect();
        let a: Vec<Vec<Q>> = cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        // ω_i = Σ_k (A⁻¹)_ik α_k
        let fund = inverse(&a);
        let positive_roots = reflection_closure_roots(&cartan).into_iter().collect();
        WeightOracle {
            cartan,
            gram,
            fund,
            positive_roots,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Root coordinates of a weight given in fundamental coordinates.
    pub fn to_root(&self, w: &[i64]) -> Vec<Q> {
        let l = self.rank();
        (0..l)
            .map(|k| (0..l).map(|i| q(w[i]) * &self.fund[i][k]).sum())
            .collect()
    }

    /// Fundamental coordinates `<μ, α_i^∨>` of a weight in root coordinates.
    pub fn to_fund(&self, r: &[Q]) -> Vec<i64> {
        let l = self.rank();
        (0..l)
            .map(|i| {
                let s: Q = (0..l).map(|k| &r[k] * q(self.cartan[k][i])).sum();
                assert!(s.is_integer());
                s.to_integer().try_into().unwrap()
            })
            .collect()
    }

    pub fn form(&self, a: &[Q], b: &[Q]) -> Q {
        let l = self.rank();
        let mut s = Q::zero();
        for i in 0..l {
            for j in 0..l {
                s += &a[i] * &b[j] * &self.gram[i][j];
            }
        }
        s
    }

    fn rho_root(&self) -> Vec<Q> {
        self.to_root(&vec![1; self.rank()])
    }

    fn root_q(r: &[i64]) -> Vec<Q> {
        r.iter().map(|&x| q(x)).collect()
    }

    /// Weyl dimension formula `Π (λ+ρ, α)/(ρ, α)`.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> u64 {
        let rho = self.rho_root();
        let lr: Vec<Q> = self
            .to_root(lambda)
            .iter()
            .zip(&rho)
            .map(|(a, b)| a + b)
            .collect();
        let mut d = Q::one();
        for alpha in &self.positive_roots {
            let a = Self::root_q(alpha);
            d *= self.form(&lr, &a) / self.form(&rho, &a);
        }
        assert!(d.is_integer());
        d.to_integer().try_into().unwrap()
    }

    /// All weight multiplicities by Freudenthal's recursion, over the box
    /// `λ − Σ c_i α_i` with `0 ≤ c_i ≤ bound`.
    pub fn freudenthal(&self, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
        let l = self.rank();
        let lam = self.to_root(lambda);
        let rho = self.rho_root();
        let shift = |v: &[Q]| -> Vec<Q> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
        let top = self.form(&shift(&lam), &shift(&lam));
        // λ − w0λ bounds every coordinate of λ − μ
        let bound: i64 = {
            let twice: Vec<Q> = lam.iter().map(|x| x * q(2)).collect();
            twice
                .iter()
                .map(|x| x.ceil().to_integer().try_into().unwrap())
                .max()
                .unwrap_or(0)
        };
        let mut boxes: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..l {
            boxes = boxes
                .into_iter()
                .flat_map(|b| {
                    (0..=bound).map(move |c| {
                        let mut b = b.clone();
                        b.push(c);
                        b
                    })
                })
                .collect();
        }
        boxes.sort_by_key(|c| c.iter().sum::<i64>());
        let mut mult: HashMap<Vec<i64>, Q> = HashMap::new();
        let mut out = BTreeMap::new();
        for c in boxes {
            let mu: Vec<Q> = lam.iter().zip(&c).map(|(a, &x)| a - q(x)).collect();
            let m = if c.iter().all(|&x| x == 0) {
                Q::one()
            } else {
                let denom = &top - self.form(&shift(&mu), &shift(&mu));
                if denom.is_zero() {
                    continue;
                }
                let mut sum = Q::zero();
                for alpha in &self.positive_roots {
                    let a = Self::root_q(alpha);
                    let mut k = 1;
                    loop {
                        let ck: Vec<i64> = c.iter().zip(alpha).map(|(x, y)| x - k * y).collect();
                        if ck.iter().any(|&x| x < 0) {
                            break;
                        }
                        if let Some(mk) = mult.get(&ck) {
                            let nu: Vec<Q> = mu.iter().zip(&a).map(|(x, y)| x + q(k) * y).collect();
                            sum += mk * self.form(&nu, &a);
                        }
                        k += 1;
                    }
                }
                sum * q(2) / denom
            };
            if !m.is_zero() {
                mult.insert(c.clone(), m.clone());
                out.insert(self.to_fund(&mu), m.to_integer().try_into().unwrap());
            }
        }
        out
    }
}

/// Dominant weights `λ − Σ c_i α_i` by brute-force box enumeration.
pub fn dominant_below_by_box(cartan: &[Vec<i64>], lambda: &[i64], bound: i64) -> BTreeSet<Vec<i64>> {
    let l = cartan.len();
    let mut out = BTreeSet::new();
    let mut c = vec![0i64; l];
    loop {
        let mu: Vec<i64> = (0..l)
            .map(|i| lambda[i] - (0..l).map(|k| c[k] * cartan[k][i]).sum::<i64>())
            .collect();
        if mu.iter().all(|&x| x >= 0) {
            out.insert(mu);
        }
        let mut k = 0;
        loop {
            if k == l {
                return out;
            }
            c[k] += 1;
            if c[k] <= bound {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Exponent vectors with `Σ a_j d_j ≤ bound`, by box enumeration.
pub fn monomials_by_box(degrees: &[i64], bound: i64) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let caps: Vec<i64> = degrees.iter().map(|d| bound / d).collect();
    let mut a = vec![0i64; degrees.len()];
    loop {
        if a.iter().zip(degrees).map(|(x, d)| x * d).sum::<i64>() <= bound {
            out.insert(a.iter().map(|&x| x as u32).collect());
        }
        let mut k = 0;
        loop {
            if k == a.len() {
                return out;
            }
            a[k] += 1;
            if a[k] <= caps[k] {
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// `n × n` integer matrices.
pub type IMat = Vec<Vec<i64>>;

fn imul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn rank_of(rows: Vec<Vec<Q>>) -> usize {
    let mut rows = rows;
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[rank][c];
                for k in 0..cols {
                    let v = &rows[rank][k] * &f;
                    rows[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `(dim 𝔞_I, dim π_I(𝔤^e))` for `sl_{n}` computed with explicit matrices.
///
/// The root `α_i + … + α_j` is the matrix unit `E_{i, j+1}`; `𝔤^e` is spanned
/// by the powers `e, e², …` of the principal nilpotent.
pub fn sl_projection_oracle(n: usize, subset: &[usize]) -> (usize, usize) {
    let unit = |i: usize, j: usize| -> IMat {
        let mut m = vec![vec![0; n]; n];
        m[i][j] = 1;
        m
    };
    let in_levi = |i: usize, j: usize| i < j && (i..j).all(|k| subset.contains(&k));
    let mut e: IMat = vec![vec![0; n]; n];
    for i in 0..n - 1 {
        e[i][i + 1] = 1;
    }
    let mut powers = vec![e.clone()];
    for _ in 2..n {
        powers.push(imul(powers.last().unwrap(), &e));
    }
    let projected: Vec<Vec<Q>> = powers
        .iter()
        .map(|p| {
            let mut v = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    v.push(if in_levi(i, j) { q(p[i][j]) } else { Q::zero() });
                }
            }
            v
        })
        .collect();
    let dim_pi = rank_of(projected);

    // 𝔞_I = centralizer of e_I in 𝔫_I
    let mut e_i = vec![vec![0; n]; n];
    for &k in subset {
        e_i[k][k + 1] = 1;
    }
    let nil: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| in_levi(i, j))
        .collect();
    let columns: Vec<Vec<Q>> = nil
        .iter()
        .map(|&(i, j)| {
            let x = unit(i, j);
            let a = imul(&e_i, &x);
            let b = imul(&x, &e_i);
            let mut v = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    v.push(q(a[r][c] - b[r][c]));
                }
            }
            v
        })
        .collect();
    // dim ker = #columns − rank
    let dim_a = nil.len() - rank_of(columns);
    (dim_a, dim_pi)
}

type Poly = BTreeMap<Vec<u32>, Q>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e).or_insert_with(Q::zero);
            *c += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add(a: &mut Poly, b: &Poly, s: &Q) {
    for (e, c) in b {
        let x = a.entry(e.clone()).or_insert_with(Q::zero);
        *x += c * s;
    }
    a.retain(|_, c| !c.is_zero());
}

fn poly_span_dim(polys: &[Poly]) -> usize {
    let monos: BTreeSet<&Vec<u32>> = polys.iter().flat_map(|p| p.keys()).collect();
    let monos: Vec<&Vec<u32>> = monos.into_iter().collect();
    let rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| monos.iter().map(|m| p.get(*m).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    rank_of(rows)
}

/// Dimension of the span of matrix coefficients of `(V ⊗ V^*)^{⊗k}`, `k ≤ n`,
/// restricted to the centralizer `{1 + Σ c_j e^j}` of the principal nilpotent
/// in `SL(size)`. These are the products of `n` entries of `g` with `n` entries
/// of `g⁻¹`.
pub fn sl_centralizer_entry_span(size: usize, n: usize) -> usize {
    let vars = size - 1;
    let var = |j: usize| -> Poly {
        let mut e = vec![0; vars];
        e[j] = 1;
        Poly::from([(e, Q::one())])
    };
    let one = Poly::from([(vec![0; vars], Q::one())]);
    // N = Σ c_j e^j has entries N[a][a+j] = c_j
    let mut nil = vec![vec![Poly::new(); size]; size];
    for a in 0..size {
        for b in a + 1..size {
            nil[a][b] = var(b - a - 1);
        }
    }
    let mat_mul = |x: &Vec<Vec<Poly>>, y: &Vec<Vec<Poly>>| -> Vec<Vec<Poly>> {
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let mut s = Poly::new();
                        for k in 0..size {
                            poly_add(&mut s, &poly_mul(&x[i][k], &y[k][j]), &Q::one());
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    let mut g = nil.clone();
    let mut ginv = vec![vec![Poly::new(); size]; size];
    for i in 0..size {
        poly_add(&mut g[i][i], &one, &Q::one());
        poly_add(&mut ginv[i][i], &one, &Q::one());
    }
    // g⁻¹ = Σ (−N)^k
    let mut power = nil.clone();
    let mut sign = -Q::one();
    for _ in 1..size {
        for i in 0..size {
            for j in 0..size {
                poly_add(&mut ginv[i][j], &power[i][j], &sign);
            }
        }
        power = mat_mul(&power, &nil);
        sign = -sign;
    }
    let dedup = |m: &Vec<Vec<Poly>>| -> Vec<Poly> {
        let mut v: Vec<Poly> = m.iter().flatten().filter(|p| !p.is_empty()).cloned().collect();
        v.sort();
        v.dedup();
        v
    };
    let (ge, gi) = (dedup(&g), dedup(&ginv));
    let mut products = vec![one];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &products {
            for a in &ge {
                for b in &gi {
                    next.push(poly_mul(&poly_mul(p, a), b));
                }
            }
        }
        next.sort();
        next.dedup();
        products = next;
    }
    poly_span_dim(&products)
}
