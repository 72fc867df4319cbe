//! Sparse integer linear combinations and exact integer linear algebra.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finite formal sum `Σ c_b b` with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

/// Elements of a tensor square, stored over pairs of basis elements.
pub type Tensor2<A, B> = LinComb<(A, B)>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::one())
    }

    pub fn term(b: B, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero();
        x.add_term(b, c);
        x
    }

    pub fn add_term(&mut self, b: B, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Add `c * other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v * c);
        }
    }

    pub fn coeff(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, BigInt> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, v)| (b.clone(), v * c)).collect(),
        }
    }

    /// Extend `f` linearly from basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Apply a map on basis elements, summing coefficients of collisions.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Keep the terms whose basis element satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| pred(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Extend a bilinear map on basis elements.
    pub fn bilinear<A: Ord + Clone, C: Ord + Clone>(
        &self,
        other: &LinComb<A>,
        mut f: impl FnMut(&B, &A) -> LinComb<C>,
    ) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                out.add_scaled(&f(x, y), &(cx * cy));
            }
        }
        out
    }

    pub fn tensor<A: Ord + Clone>(&self, other: &LinComb<A>) -> Tensor2<B, A> {
        self.bilinear(other, |x, y| LinComb::basis((x.clone(), y.clone())))
    }
}

impl<B: Ord + Clone> FromIterator<(B, BigInt)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, BigInt)>>(iter: I) -> Self {
        let mut x = Self::zero();
        for (b, c) in iter {
            x.add_term(b, c);
        }
        x
    }
}

impl<B: Ord + Clone> Sum for LinComb<B> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: LinComb<B>) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> SubAssign for LinComb<B> {
    fn sub_assign(&mut self, rhs: LinComb<B>) {
        *self -= &rhs;
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -self.clone()
    }
}

impl<B: Ord + Clone> Mul<&BigInt> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &BigInt) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{a}*{b}")?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(b, c)| (b, c.to_string()))).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<B> {
    basis: B,
    coeff: String,
}

impl<B: Ord + Serialize> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(b, c)| TermRepr {
            basis: b,
            coeff: c.to_string(),
        }))
    }
}

impl<'de, B: Ord + Clone + DeserializeOwned> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<TermRepr<B>> = Vec::deserialize(d)?;
        let mut out = LinComb::zero();
        for t in raw {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            out.add_term(t.basis, c);
        }
        Ok(out)
    }
}

/// A dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(&big)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// The matrix whose columns are the coefficient vectors of `vectors`,
    /// together with the row index (the union of their supports).
    pub fn from_columns<B: Ord + Clone + Hash>(vectors: &[LinComb<B>]) -> (Self, Vec<B>) {
        let mut index: HashMap<B, usize> = HashMap::new();
        let mut basis = Vec::new();
        for v in vectors {
            for b in v.support() {
                index.entry(b.clone()).or_insert_with(|| {
                    basis.push(b.clone());
                    basis.len() - 1
                });
            }
        }
        let mut m = Self::zeros(basis.len(), vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            for (b, c) in v.iter() {
                m.set(index[b], j, c.clone());
            }
        }
        (m, basis)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Elimination::run(self, false).pivots.len()
    }

    /// An integer basis of `{v : M v = 0}`; each vector is content-reduced
    /// with its first nonzero entry positive.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let e = Elimination::run(self, true);
        let pivot_cols: Vec<usize> = e.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = vec![BigInt::zero(); self.cols];
            v[f] = e.last_pivot.clone();
            for (k, &(_, c)) in e.pivots.iter().enumerate() {
                v[c] = -e.rows[k][f].clone();
            }
            basis.push(normalize(v));
        }
        basis
    }
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if neg { -g } else { g };
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    v
}

/// Fraction-free (Bareiss) elimination. With `reduce` set, entries above each
/// pivot are cleared too, and every pivot ends up equal to `last_pivot`.
struct Elimination {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
    last_pivot: BigInt,
}

impl Elimination {
    fn run(m: &IntMatrix, reduce: bool) -> Self {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| m.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r);
            let (prow, tail) = tail.split_first_mut().expect("row r exists");
            let piv = prow[c].clone();
            let above: &mut [Vec<BigInt>] = if reduce { head } else { &mut [] };
            for row in above.iter_mut().chain(tail.iter_mut()) {
                let factor = row[c].clone();
                for j in c..m.cols {
                    if j == c || !(row[j].is_zero() && prow[j].is_zero()) {
                        let mut v = &piv * &row[j];
                        if !factor.is_zero() && !prow[j].is_zero() {
                            v -= &factor * &prow[j];
                        }
                        if !prev.is_one() && !v.is_zero() {
                            let (q, rem) = v.div_rem(&prev);
                            debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                            v = q;
                        }
                        row[j] = v;
                    }
                }
                if reduce {
                    for j in 0..c {
                        if !row[j].is_zero() {
                            let v = &piv * &row[j];
                            row[j] = if prev.is_one() { v } else { v / &prev };
                        }
                    }
                }
            }
            pivots.push((r, c));
            prev = piv;
            r += 1;
        }
        rows.truncate(r);
        Elimination {
            rows,
            pivots,
            last_pivot: prev,
        }
    }
}

/// Kernel of the linear map `x ↦ f(x)` restricted to `domain`, as linear
/// combinations of domain elements.
pub fn kernel_of_map<B, C>(domain: &[B], f: impl Fn(&B) -> LinComb<C>) -> Vec<LinComb<B>>
where
    B: Ord + Clone,
    C: Ord + Clone + Hash,
{
    let images: Vec<LinComb<C>> = domain.iter().map(f).collect();
    let (m, _) = IntMatrix::from_columns(&images);
    let m = if m.rows() == 0 {
        IntMatrix::zeros(0, domain.len())
    } else {
        m
    };
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            domain
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(b, c)| (b.clone(), c))
                .collect()
        })
        .collect()
}

/// An echelon basis of a growing subspace, built one vector at a time.
///
/// Each stored row is content-reduced and keyed by its smallest basis
/// element; reduction is fraction-free.
#[derive(Clone, Debug)]
pub struct SpanBuilder<B: Ord> {
    rows: BTreeMap<B, LinComb<B>>,
}

impl<B: Ord> Default for SpanBuilder<B> {
    fn default() -> Self {
        SpanBuilder { rows: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> SpanBuilder<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// A nonzero multiple of `v` minus an element of the span, with no
    /// smallest-key collision against the stored rows.
    fn reduce(&self, v: &LinComb<B>) -> LinComb<B> {
        let mut v = v.clone();
        loop {
            let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            let Some(row) = self.rows.get(&k) else {
                return v;
            };
            let p = row.coeff(&k);
            let g = p.gcd(&c);
            let mut next = v.scale(&(&p / &g));
            next.add_scaled(row, &-(&c / &g));
            v = content_reduced(next);
        }
    }

    /// Add `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &LinComb<B>) -> bool {
        let r = self.reduce(v);
        match r.iter().next().map(|(k, _)| k.clone()) {
            None => false,
            Some(k) => {
                self.rows.insert(k, r);
                true
            }
        }
    }

    pub fn contains(&self, v: &LinComb<B>) -> bool {
        self.reduce(v).is_zero()
    }
}

fn content_reduced<B: Ord + Clone>(v: LinComb<B>) -> LinComb<B> {
    let g = v.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.scale_div(&g)
}

impl<B: Ord + Clone> LinComb<B> {
    /// Exact division of every coefficient by `d`.
    fn scale_div(&self, d: &BigInt) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c / d)).collect(),
        }
    }
}

/// Dimension of the span of `vectors`.
pub fn span_rank<B: Ord + Clone>(vectors: &[LinComb<B>]) -> usize {
    let mut s = SpanBuilder::new();
    for v in vectors {
        s.insert(v);
    }
    s.rank()
}

/// Whether `v` lies in the rational span of `vectors`.
pub fn in_span<B: Ord + Clone>(vectors: &[LinComb<B>], v: &LinComb<B>) -> bool {
    let mut s = SpanBuilder::new();
    for x in vectors {
        s.insert(x);
    }
    s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent oracle: rank by Gaussian elimination over the rationals.
    fn rational_rank(m: &IntMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(rank, p);
            let pivot = a[rank][c].clone();
            for i in 0..a.len() {
                if i != rank && !a[i][c].is_zero() {
                    let f = &a[i][c] / &pivot;
                    for j in 0..m.cols() {
                        let d = &f * &a[rank][j];
                        a[i][j] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn lincomb_has_no_explicit_zeros() {
        let mut x = LinComb::term("a", 3);
        x.add_term("a", -3);
        assert!(x.is_zero());
        let y = LinComb::term("b", 2) - LinComb::term("b", 2);
        assert_eq!(y.len(), 0);
        assert_eq!(LinComb::term("c", 0), LinComb::zero());
    }

    #[test]
    fn lincomb_big_coefficients() {
        let huge = BigInt::from(u64::MAX) * big(7) + big(5);
        let x = LinComb::term(1u8, huge.clone());
        let y = x.scale(&huge);
        assert_eq!(y.coeff(&1), &huge * &huge);
        let js = serde_json::to_string(&y).unwrap();
        let back: LinComb<u8> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, y);
        assert!(js.contains(&(&huge * &huge).to_string()));
    }

    #[test]
    fn tensor_is_bilinear() {
        let a = LinComb::term('x', 2) + LinComb::term('y', -1);
        let b = LinComb::term(1u8, 3);
        let t = a.tensor(&b);
        assert_eq!(t.coeff(&('x', 1)), big(6));
        assert_eq!(t.coeff(&('y', 1)), big(-3));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn kernel_small_cases() {
        assert!(IntMatrix::identity(4).kernel_basis().is_empty());
        let k = IntMatrix::from_i64(&[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![big(1), big(-1)]]);
        let z = IntMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(z.len(), 3);
        let m = IntMatrix::from_i64(&[vec![2, 4, 6], vec![1, 2, 3]]);
        assert_eq!(m.rank(), 1);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_with_huge_entries() {
        let h = BigInt::from(1u128 << 100);
        let m = IntMatrix::from_rows(&[vec![h.clone(), h.clone() + 1, big(3)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn random_matrices_rank_nullity() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let dense = rng.gen_bool(0.5);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| if dense || rng.gen_bool(0.3) { rng.gen_range(-4..=4) } else { 0 })
                        .collect()
                })
                .collect();
            // make some rows dependent
            let mut data = data;
            if rows > 2 {
                let combo: Vec<i64> = (0..cols).map(|j| 2 * data[0][j] - 3 * data[1][j]).collect();
                data[rows - 1] = combo;
            }
            let m = IntMatrix::from_i64(&data);
            let k = m.kernel_basis();
            let r = m.rank();
            assert_eq!(r, rational_rank(&m));
            assert_eq!(r + k.len(), cols);
            for v in &k {
                assert!(m.mul_vec(v).iter().all(Zero::is_zero));
                assert!(v.iter().any(|x| !x.is_zero()));
            }
            if !k.is_empty() {
                let km = IntMatrix::from_rows(&k);
                assert_eq!(rational_rank(&km), k.len());
            }
            let cols: Vec<LinComb<usize>> = (0..rows)
                .map(|i| (0..cols).map(|j| (j, m.get(i, j).clone())).collect())
                .collect();
            assert_eq!(span_rank(&cols), r);
        }
    }

    #[test]
    fn kernel_of_map_and_span() {
        let domain = vec!['a', 'b', 'c'];
        let ker = kernel_of_map(&domain, |&x| match x {
            'a' => LinComb::basis(0u8),
            'b' => LinComb::basis(0u8),
            _ => LinComb::basis(1u8),
        });
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], LinComb::basis('a') - LinComb::basis('b'));
        let vs = vec![LinComb::basis('a'), LinComb::basis('b')];
        assert_eq!(span_rank(&vs), 2);
        assert!(in_span(&vs, &(LinComb::basis('a') + LinComb::basis('b'))));
        assert!(!in_span(&vs, &LinComb::basis('c')));
    }
}
