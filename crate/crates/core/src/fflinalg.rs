//! Exact linear algebra over GF(2) and GF(3).
//!
//! Vectors, Gaussian-elimination ranks, projective point enumeration,
//! quadratic and bilinear forms, quadrics. GF(2) vectors are stored as
//! machine-word bitmasks (bit i = coordinate i), GF(3) vectors as small
//! dense arrays; both present the same coordinate-wise interface.
//!
//! Only characteristics 2 and 3 are supported; everything downstream needs
//! exactly PG(5,2), PG(4,2), PG(3,2) and PG(3,3).

use crate::{Error, Result};

/// Internal storage: bitmask for GF(2), one byte per coordinate for GF(3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Bits(u64),
    Dense(Vec<u8>),
}

/// A vector over GF(2) or GF(3), every coordinate reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    p: u8,
    n: usize,
    repr: Repr,
}

impl FieldVector {
    /// Build from explicit coordinates; they are reduced mod `p`.
    pub fn new(p: u8, coords: &[u8]) -> Result<FieldVector> {
        check_characteristic(p)?;
        if coords.len() > 64 {
            return Err(Error::DimensionOutOfRange(coords.len()));
        }
        let n = coords.len();
        let repr = match p {
            2 => {
                let mut bits = 0u64;
                for (i, &c) in coords.iter().enumerate() {
                    bits |= u64::from(c % 2) << i;
                }
                Repr::Bits(bits)
            }
            _ => Repr::Dense(coords.iter().map(|&c| c % 3).collect()),
        };
        Ok(FieldVector { p, n, repr })
    }

    pub fn zero(p: u8, n: usize) -> Result<FieldVector> {
        FieldVector::new(p, &vec![0; n])
    }

    /// Standard basis vector e_i (0-indexed).
    pub fn unit(p: u8, n: usize, i: usize) -> Result<FieldVector> {
        let mut coords = vec![0u8; n];
        coords[i] = 1;
        FieldVector::new(p, &coords)
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coord(&self, i: usize) -> u8 {
        match &self.repr {
            Repr::Bits(bits) => (bits >> i & 1) as u8,
            Repr::Dense(c) => c[i],
        }
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.n).map(|i| self.coord(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(bits) => *bits == 0,
            Repr::Dense(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.coord(i) != 0)
    }

    /// Coordinate-wise sum mod p. Panics on mixed dimensions or fields;
    /// public entry points validate before calling.
    pub fn add(&self, other: &FieldVector) -> FieldVector {
        assert_eq!((self.p, self.n), (other.p, other.n), "mixed vectors");
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => FieldVector {
                p: self.p,
                n: self.n,
                repr: Repr::Bits(a ^ b),
            },
            (Repr::Dense(a), Repr::Dense(b)) => FieldVector {
                p: self.p,
                n: self.n,
                repr: Repr::Dense(a.iter().zip(b).map(|(x, y)| (x + y) % 3).collect()),
            },
            _ => unreachable!("repr always matches characteristic"),
        }
    }

    pub fn scale(&self, lambda: u8) -> FieldVector {
        let l = lambda % self.p;
        match &self.repr {
            Repr::Bits(bits) => FieldVector {
                p: self.p,
                n: self.n,
                repr: Repr::Bits(if l == 0 { 0 } else { *bits }),
            },
            Repr::Dense(c) => FieldVector {
                p: self.p,
                n: self.n,
                repr: Repr::Dense(c.iter().map(|&x| (x * l) % 3).collect()),
            },
        }
    }

    /// Projective representative: scaled so the first nonzero coordinate is 1.
    pub fn projective_rep(&self) -> FieldVector {
        match self.first_nonzero() {
            None => self.clone(),
            Some(i) => {
                let lead = self.coord(i);
                if lead == 1 {
                    self.clone()
                } else {
                    // over GF(3) the only other unit is 2, its own inverse
                    self.scale(2)
                }
            }
        }
    }

    pub fn is_proportional_to(&self, other: &FieldVector) -> bool {
        self.projective_rep() == other.projective_rep()
    }
}

impl std::fmt::Display for FieldVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.coord(i))?;
        }
        write!(f, ")")
    }
}

fn check_characteristic(p: u8) -> Result<()> {
    if p == 2 || p == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedCharacteristic(p))
    }
}

/// All points of PG(n-1, p) as canonical representatives (first nonzero
/// coordinate 1), in lexicographic order on coordinate tuples. Returns
/// (p^n - 1)/(p - 1) pairwise non-proportional vectors.
pub fn enumerate_projective_points(n: usize, p: u8) -> Result<Vec<FieldVector>> {
    check_characteristic(p)?;
    assert!(n >= 1, "projective space needs dimension >= 1");
    if n > 64 {
        return Err(Error::DimensionOutOfRange(n));
    }
    let mut points = Vec::new();
    let mut coords = vec![0u8; n];
    // odometer with coords[0] most significant gives lexicographic order
    loop {
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(points);
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < p {
                break;
            }
            coords[i] = 0;
        }
        let v = FieldVector::new(p, &coords)?;
        if v.first_nonzero().map(|i| v.coord(i)) == Some(1) {
            points.push(v);
        }
    }
}

/// Rank of the span, by exact Gaussian elimination mod p.
pub fn gf_rank(vectors: &[FieldVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let (p, n) = (first.p, first.n);
    if vectors.iter().any(|v| v.p != p || v.n != n) {
        return Err(Error::MixedDimensions);
    }
    let mut rows: Vec<Vec<u8>> = vectors.iter().map(|v| v.coords()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        // normalize pivot to 1 (only matters for GF(3))
        if rows[rank][col] == 2 {
            for x in rows[rank].iter_mut() {
                *x = (*x * 2) % p;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    let sub = (factor * pv) % p;
                    *x = (*x + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// Classification tag a quadratic form is constructed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadricKind {
    Elliptic,
    Hyperbolic,
    Parabolic,
    Unspecified,
}

/// A quadratic form given by an upper-triangular coefficient matrix:
/// Q(x) = sum over i <= j of c[i][j] x_i x_j, all arithmetic mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    p: u8,
    n: usize,
    coeffs: Vec<Vec<u8>>,
    kind: QuadricKind,
}

impl QuadraticForm {
    pub fn new(p: u8, n: usize, kind: QuadricKind) -> Result<QuadraticForm> {
        check_characteristic(p)?;
        Ok(QuadraticForm {
            p,
            n,
            coeffs: vec![vec![0; n]; n],
            kind,
        })
    }

    /// Set the coefficient of x_i x_j (requires i <= j).
    pub fn set_coeff(&mut self, i: usize, j: usize, c: u8) {
        assert!(i <= j, "coefficients are upper triangular");
        self.coeffs[i][j] = c % self.p;
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> QuadricKind {
        self.kind
    }

    pub fn evaluate(&self, x: &FieldVector) -> u8 {
        assert_eq!((x.p, x.n), (self.p, self.n), "vector/form mismatch");
        let p = u32::from(self.p);
        let mut acc = 0u32;
        for i in 0..self.n {
            let xi = u32::from(x.coord(i));
            if xi == 0 {
                continue;
            }
            for j in i..self.n {
                acc += u32::from(self.coeffs[i][j]) * xi * u32::from(x.coord(j));
            }
        }
        (acc % p) as u8
    }

    /// Projective points with Q = 0.
    pub fn projective_zero_points(&self) -> Vec<FieldVector> {
        enumerate_projective_points(self.n, self.p)
            .expect("form characteristic already validated")
            .into_iter()
            .filter(|x| self.evaluate(x) == 0)
            .collect()
    }

    /// Number of projective points with Q = 0.
    pub fn quadric_point_count(&self) -> usize {
        self.projective_zero_points().len()
    }
}

/// Q(x) = x1 x2 + x3 x4 + x5^2 + x5 x6 + x6^2 on GF(2)^6, the standard
/// elliptic normal form; its projective zero set Q⁻(5,2) has 27 points.
pub fn standard_elliptic_form() -> QuadraticForm {
    let mut q = QuadraticForm::new(2, 6, QuadricKind::Elliptic).unwrap();
    q.set_coeff(0, 1, 1);
    q.set_coeff(2, 3, 1);
    q.set_coeff(4, 4, 1);
    q.set_coeff(4, 5, 1);
    q.set_coeff(5, 5, 1);
    q
}

/// Q(x) = x1 x2 + x3 x4 + x5 x6 on GF(2)^6: the hyperbolic quadric Q⁺(5,2),
/// 35 points.
pub fn standard_hyperbolic_form() -> QuadraticForm {
    let mut q = QuadraticForm::new(2, 6, QuadricKind::Hyperbolic).unwrap();
    q.set_coeff(0, 1, 1);
    q.set_coeff(2, 3, 1);
    q.set_coeff(4, 5, 1);
    q
}

/// Q(x) = x1 x2 + x3 x4 + x5^2 on GF(2)^5: the parabolic quadric Q(4,2),
/// 15 points.
pub fn standard_parabolic_form() -> QuadraticForm {
    let mut q = QuadraticForm::new(2, 5, QuadricKind::Parabolic).unwrap();
    q.set_coeff(0, 1, 1);
    q.set_coeff(2, 3, 1);
    q.set_coeff(4, 4, 1);
    q
}

/// A bilinear form b(x,y) = x^T G y with verified structural flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    p: u8,
    n: usize,
    gram: Vec<Vec<u8>>,
    symmetric: bool,
    alternating: bool,
    nondegenerate: bool,
}

impl BilinearForm {
    /// Build from a Gram matrix; the flags are computed, not declared.
    pub fn from_gram(p: u8, gram: Vec<Vec<u8>>) -> Result<BilinearForm> {
        check_characteristic(p)?;
        let n = gram.len();
        assert!(gram.iter().all(|row| row.len() == n), "square matrix");
        let gram: Vec<Vec<u8>> = gram
            .into_iter()
            .map(|row| row.into_iter().map(|c| c % p).collect())
            .collect();
        let symmetric = (0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i]));
        // b(x,x) = 0 for all x  <=>  zero diagonal and G antisymmetric
        let alternating = (0..n).all(|i| gram[i][i] == 0)
            && (0..n).all(|i| (0..n).all(|j| (gram[i][j] + gram[j][i]).is_multiple_of(p)));
        let rows: Vec<FieldVector> = gram
            .iter()
            .map(|row| FieldVector::new(p, row))
            .collect::<Result<_>>()?;
        let nondegenerate = gf_rank(&rows)? == n;
        Ok(BilinearForm {
            p,
            n,
            gram,
            symmetric,
            alternating,
            nondegenerate,
        })
    }

    /// The standard nondegenerate alternating form on GF(p)^4 with Gram
    /// blocks [[0,1],[-1,0]].
    pub fn standard_symplectic(p: u8, n: usize) -> Result<BilinearForm> {
        check_characteristic(p)?;
        assert!(n.is_multiple_of(2), "symplectic form needs even dimension");
        let mut gram = vec![vec![0u8; n]; n];
        for k in (0..n).step_by(2) {
            gram[k][k + 1] = 1;
            gram[k + 1][k] = p - 1;
        }
        BilinearForm::from_gram(p, gram)
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn gram(&self) -> &[Vec<u8>] {
        &self.gram
    }

    pub fn evaluate(&self, x: &FieldVector, y: &FieldVector) -> u8 {
        assert_eq!((x.p, x.n), (self.p, self.n), "vector/form mismatch");
        assert_eq!((y.p, y.n), (self.p, self.n), "vector/form mismatch");
        let p = u32::from(self.p);
        let mut acc = 0u32;
        for i in 0..self.n {
            let xi = u32::from(x.coord(i));
            if xi == 0 {
                continue;
            }
            for j in 0..self.n {
                acc += u32::from(self.gram[i][j]) * xi * u32::from(y.coord(j));
            }
        }
        (acc % p) as u8
    }
}

/// The polar form b(x,y) = Q(x+y) - Q(x) - Q(y) of a characteristic-2
/// quadratic form; symmetric and alternating, and nondegenerate for the
/// standard elliptic form.
pub fn polarize(q: &QuadraticForm) -> Result<BilinearForm> {
    if q.p != 2 {
        return Err(Error::UnsupportedCharacteristic(q.p));
    }
    let n = q.n;
    let basis: Vec<FieldVector> = (0..n)
        .map(|i| FieldVector::unit(2, n, i))
        .collect::<Result<_>>()?;
    let gram: Vec<Vec<u8>> = basis
        .iter()
        .map(|ei| {
            basis
                .iter()
                .map(|ej| (q.evaluate(&ei.add(ej)) + q.evaluate(ei) + q.evaluate(ej)) % 2)
                .collect()
        })
        .collect();
    BilinearForm::from_gram(2, gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_point_counts() {
        assert_eq!(enumerate_projective_points(6, 2).unwrap().len(), 63);
        assert_eq!(enumerate_projective_points(1, 2).unwrap().len(), 1);
        assert_eq!(enumerate_projective_points(4, 3).unwrap().len(), 40);
        assert!(matches!(
            enumerate_projective_points(3, 5),
            Err(Error::UnsupportedCharacteristic(5))
        ));
    }

    #[test]
    fn projective_points_pairwise_non_proportional() {
        for p in [2u8, 3] {
            for n in 1..=6 {
                let pts = enumerate_projective_points(n, p).unwrap();
                let expected =
                    ((p as usize).pow(n as u32) - 1) / (p as usize - 1);
                assert_eq!(pts.len(), expected, "n={n} p={p}");
                for i in 0..pts.len() {
                    assert_eq!(pts[i].first_nonzero().map(|k| pts[i].coord(k)), Some(1));
                    for j in i + 1..pts.len() {
                        assert!(!pts[i].is_proportional_to(&pts[j]), "n={n} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn projective_points_lexicographic() {
        let pts = enumerate_projective_points(2, 3).unwrap();
        let coords: Vec<Vec<u8>> = pts.iter().map(|v| v.coords()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        let mut sorted = coords.clone();
        sorted.sort();
        assert_eq!(coords, sorted);
    }

    #[test]
    fn rank_basics() {
        assert_eq!(gf_rank(&[]).unwrap(), 0);
        let all: Vec<FieldVector> = enumerate_projective_points(6, 2).unwrap();
        assert_eq!(gf_rank(&all).unwrap(), 6);
        let mixed = vec![
            FieldVector::new(2, &[1, 0]).unwrap(),
            FieldVector::new(2, &[1, 0, 0]).unwrap(),
        ];
        assert!(matches!(gf_rank(&mixed), Err(Error::MixedDimensions)));
    }

    /// Exhaustive span oracle: rank r must mean the additive closure has
    /// exactly p^r elements.
    #[test]
    fn rank_matches_span_enumeration() {
        use std::collections::HashSet;
        for p in [2u8, 3] {
            for n in 1..=4usize {
                let pts = enumerate_projective_points(n, p).unwrap();
                // a few deterministic subsets, including degenerate ones
                let subsets: Vec<Vec<FieldVector>> = vec![
                    vec![],
                    vec![pts[0].clone()],
                    vec![pts[0].clone(), pts[0].scale(p - 1)],
                    pts.iter().take(3).cloned().collect(),
                    pts.clone(),
                ];
                for set in subsets {
                    let rank = gf_rank(&set).unwrap();
                    let mut span: HashSet<Vec<u8>> =
                        HashSet::from([FieldVector::zero(p, n).unwrap().coords()]);
                    // close under addition of generators until stable
                    loop {
                        let mut added = false;
                        let current: Vec<Vec<u8>> = span.iter().cloned().collect();
                        for s in &current {
                            let sv = FieldVector::new(p, s).unwrap();
                            for g in &set {
                                if span.insert(sv.add(g).coords()) {
                                    added = true;
                                }
                            }
                        }
                        if !added {
                            break;
                        }
                    }
                    assert_eq!(span.len(), (p as usize).pow(rank as u32), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn elliptic_form_values() {
        let q = standard_elliptic_form();
        assert_eq!(q.evaluate(&FieldVector::zero(2, 6).unwrap()), 0);
        assert_eq!(q.quadric_point_count(), 27);
        // Q(lambda x) = lambda^2 Q(x) is trivial over GF(2); spot-check e5
        let e5 = FieldVector::unit(2, 6, 4).unwrap();
        assert_eq!(q.evaluate(&e5), 1);
    }

    #[test]
    fn quadric_point_counts() {
        assert_eq!(standard_elliptic_form().quadric_point_count(), 27);
        assert_eq!(standard_hyperbolic_form().quadric_point_count(), 35);
        assert_eq!(standard_parabolic_form().quadric_point_count(), 15);
    }

    #[test]
    fn polarized_elliptic_form() {
        let b = polarize(&standard_elliptic_form()).unwrap();
        assert!(b.is_symmetric());
        assert!(b.is_alternating());
        assert!(b.is_nondegenerate());
        let rows: Vec<FieldVector> = b
            .gram()
            .iter()
            .map(|r| FieldVector::new(2, r).unwrap())
            .collect();
        assert_eq!(gf_rank(&rows).unwrap(), 6);
        let e1 = FieldVector::unit(2, 6, 0).unwrap();
        let e2 = FieldVector::unit(2, 6, 1).unwrap();
        assert_eq!(b.evaluate(&e1, &e2), 1);
        // alternating and symmetric over the whole space
        let pts = enumerate_projective_points(6, 2).unwrap();
        for x in &pts {
            assert_eq!(b.evaluate(x, x), 0);
            for y in pts.iter().take(8) {
                assert_eq!(b.evaluate(x, y), b.evaluate(y, x));
            }
        }
    }

    #[test]
    fn symplectic_forms() {
        for p in [2u8, 3] {
            let b = BilinearForm::standard_symplectic(p, 4).unwrap();
            assert!(b.is_alternating());
            assert!(b.is_nondegenerate());
            assert_eq!(b.is_symmetric(), p == 2);
        }
    }

    #[test]
    fn gf3_vector_arithmetic() {
        let v = FieldVector::new(3, &[1, 2, 0, 1]).unwrap();
        let w = FieldVector::new(3, &[2, 2, 1, 0]).unwrap();
        assert_eq!(v.add(&w).coords(), vec![0, 1, 1, 1]);
        assert_eq!(v.scale(2).coords(), vec![2, 1, 0, 2]);
        assert!(v.is_proportional_to(&v.scale(2)));
        let rep = FieldVector::new(3, &[0, 2, 1, 0]).unwrap().projective_rep();
        assert_eq!(rep.coords(), vec![0, 1, 2, 0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_field_vector(n: usize) -> impl Strategy<Value = FieldVector> {
            (prop_oneof![Just(2u8), Just(3u8)], proptest::collection::vec(0u8..3, n))
                .prop_map(|(p, coords)| FieldVector::new(p, &coords).unwrap())
        }

        proptest! {
            /// rank r of a random subset means its additive span has p^r
            /// elements (brute-force closure oracle).
            #[test]
            fn rank_matches_random_span(
                p in prop_oneof![Just(2u8), Just(3u8)],
                n in 1usize..=4,
                picks in proptest::collection::vec(0usize..40, 0..6),
            ) {
                use std::collections::HashSet;
                let pts = enumerate_projective_points(n, p).unwrap();
                let set: Vec<FieldVector> =
                    picks.iter().map(|&i| pts[i % pts.len()].clone()).collect();
                let rank = gf_rank(&set).unwrap();
                let mut span: HashSet<Vec<u8>> =
                    HashSet::from([FieldVector::zero(p, n).unwrap().coords()]);
                loop {
                    let mut added = false;
                    for s in span.clone() {
                        let sv = FieldVector::new(p, &s).unwrap();
                        for g in &set {
                            added |= span.insert(sv.add(g).coords());
                        }
                    }
                    if !added {
                        break;
                    }
                }
                prop_assert_eq!(span.len(), (p as usize).pow(rank as u32));
            }

            /// Q(λx) = λ²Q(x) for random upper-triangular forms.
            #[test]
            fn quadratic_scaling(
                v in arb_field_vector(4),
                entries in proptest::collection::vec(0u8..3, 10),
            ) {
                let p = v.characteristic();
                let mut q = QuadraticForm::new(p, 4, QuadricKind::Unspecified).unwrap();
                let mut it = entries.into_iter();
                for i in 0..4 {
                    for j in i..4 {
                        q.set_coeff(i, j, it.next().unwrap());
                    }
                }
                for lambda in 0..p {
                    let scaled = q.evaluate(&v.scale(lambda));
                    let expected = (lambda * lambda % p) * q.evaluate(&v) % p;
                    prop_assert_eq!(scaled, expected);
                }
            }

            /// The polar form of a characteristic-2 form is symmetric,
            /// alternating, and agrees with Q(x+y) + Q(x) + Q(y).
            #[test]
            fn polarization_identity(
                x in proptest::collection::vec(0u8..2, 6),
                y in proptest::collection::vec(0u8..2, 6),
            ) {
                let q = standard_elliptic_form();
                let b = polarize(&q).unwrap();
                let xv = FieldVector::new(2, &x).unwrap();
                let yv = FieldVector::new(2, &y).unwrap();
                let direct =
                    (q.evaluate(&xv.add(&yv)) + q.evaluate(&xv) + q.evaluate(&yv)) % 2;
                prop_assert_eq!(b.evaluate(&xv, &yv), direct);
                prop_assert_eq!(b.evaluate(&xv, &yv), b.evaluate(&yv, &xv));
                prop_assert_eq!(b.evaluate(&xv, &xv), 0);
            }
        }
    }
}
