//! Presentations built from geometric data: sextics, point sets and the
//! normal forms of the small strata.

use num_traits::{One, Zero};
use rand::Rng;

use crate::cohomology::is_injective;
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::forms::{int, monomial_basis, space_dim, span_dimension, Form, Monomial, Scalar};
use crate::gradedmat::{maximal_minors, sigma_membership, Presentation};
use crate::linalg::{self, Matrix};

/// Resampling budget for the randomized builders.
pub const RETRY_BUDGET: usize = 64;

/// `O(-4) -> O(2)` given by a sextic, so that the cokernel is `O_C(2)`.
pub fn sextic_sheaf(f: &Form) -> Result<Presentation> {
    if f.degree() != 6 {
        return Err(Error::Precondition(format!(
            "expected a sextic, got degree {}",
            f.degree()
        )));
    }
    if f.is_zero() {
        return Err(Error::Precondition("the sextic is zero".into()));
    }
    Presentation::new(vec![-4], vec![2], vec![vec![f.clone()]])
}

/// Distinct rational points of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<[Scalar; 3]>,
}

impl PointSet {
    pub fn new(points: Vec<[Scalar; 3]>) -> Result<Self> {
        for (k, p) in points.iter().enumerate() {
            if p.iter().all(Zero::is_zero) {
                return Err(Error::Precondition(format!("point {} is (0:0:0)", k + 1)));
            }
            for (l, q) in points[..k].iter().enumerate() {
                if rank_of(&[p.clone(), q.clone()]) < 2 {
                    return Err(Error::Precondition(format!(
                        "points {} and {} coincide",
                        l + 1,
                        k + 1
                    )));
                }
            }
        }
        Ok(PointSet { points })
    }

    /// `n` distinct integer points with coordinates in `[-height, height]`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R, height: i64) -> Self {
        let mut points: Vec<[Scalar; 3]> = Vec::with_capacity(n);
        while points.len() < n {
            let p = [0; 3].map(|_| int(rng.gen_range(-height..=height)));
            if p.iter().all(Zero::is_zero) {
                continue;
            }
            if points.iter().all(|q| rank_of(&[p.clone(), q.clone()]) == 2) {
                points.push(p);
            }
        }
        PointSet { points }
    }

    pub fn points(&self) -> &[[Scalar; 3]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rows are points, columns the degree `d` monomials.
    pub fn evaluation_matrix(&self, d: i32) -> Matrix<Scalar> {
        let basis = monomial_basis(d);
        self.points
            .iter()
            .map(|p| basis.iter().map(|m| eval_monomial(m, p)).collect())
            .collect()
    }

    pub fn on_conic(&self) -> bool {
        linalg::rank_rational(&self.evaluation_matrix(2), 6) < 6
    }

    pub fn four_collinear(&self) -> bool {
        let n = self.points.len();
        crate::gradedmat::subsets(n, 4.min(n))
            .into_iter()
            .filter(|s| s.len() == 4)
            .any(|s| {
                rank_of(
                    &s.iter()
                        .map(|&k| self.points[k].clone())
                        .collect::<Vec<_>>(),
                ) <= 2
            })
    }
}

fn rank_of(rows: &[[Scalar; 3]]) -> usize {
    linalg::rank(&Rationals, rows.iter().map(|r| r.to_vec()).collect(), 3)
}

fn eval_monomial(m: &Monomial, p: &[Scalar; 3]) -> Scalar {
    let pow = |b: &Scalar, e: u32| (0..e).fold(Scalar::one(), |acc, _| acc * b);
    pow(&p[0], m.x) * pow(&p[1], m.y) * pow(&p[2], m.z)
}

/// Basis of the forms of degree `d` vanishing on `z`.
pub fn ideal_generators(z: &PointSet, d: i32) -> Vec<Form> {
    let n = space_dim(d);
    if n == 0 {
        return Vec::new();
    }
    linalg::kernel(&Rationals, z.evaluation_matrix(d), n)
        .into_iter()
        .map(|v| Form::from_coeffs(d, v).expect("kernel vector has the right length"))
        .collect()
}

/// The cubic generators of `I_Z` and the `4 x 3` matrix `M` of linear forms
/// with `G M = 0`, as the presentation `3 O(-1) -> 4 O`.
pub fn hilbert_burch(z: &PointSet) -> Result<(Vec<Form>, Presentation)> {
    if z.len() != 6 {
        return Err(Error::Precondition(format!(
            "expected 6 points, got {}",
            z.len()
        )));
    }
    if z.on_conic() {
        return Err(Error::Precondition("the points lie on a conic".into()));
    }
    let g = ideal_generators(z, 3);
    if g.len() != 4 {
        return Err(Error::Precondition(format!(
            "{} cubics through the points, expected 4",
            g.len()
        )));
    }
    // unknown (j, k): coefficient of the k-th variable in row j
    let vars = [Form::x(), Form::y(), Form::z()];
    let mut cols = Vec::with_capacity(12);
    for gj in &g {
        for v in &vars {
            cols.push(gj.mul(v).coeffs().to_vec());
        }
    }
    let m = linalg::transpose(&cols, space_dim(4));
    let syzygies = linalg::kernel(&Rationals, m, 12);
    if syzygies.len() != 3 {
        return Err(Error::Precondition(format!(
            "{} linear syzygies among the cubics, expected 3",
            syzygies.len()
        )));
    }
    let entries = (0..4)
        .map(|j| {
            syzygies
                .iter()
                .map(|s| {
                    let c = &s[3 * j..3 * j + 3];
                    Form::from_coeffs(1, c.to_vec()).expect("three coefficients")
                })
                .collect()
        })
        .collect();
    let mat = Presentation::new(vec![-1; 3], vec![0; 4], entries)?;
    Ok((g, mat))
}

/// Whether two families of forms of the same degree span the same space.
pub fn same_span(a: &[Form], b: &[Form]) -> Result<bool> {
    let both: Vec<Form> = a.iter().chain(b).cloned().collect();
    let n = span_dimension(&both)?;
    Ok(n == span_dimension(a)? && n == span_dimension(b)?)
}

/// `J_Z(3)` on the sextic `f`: the cubic coefficients of `f` in terms of
/// the generators form the `O(-3)` column, the Hilbert–Burch matrix the
/// other three.
pub fn twisted_ideal_sheaf(z: &PointSet, f: &Form) -> Result<Presentation> {
    if f.degree() != 6 || f.is_zero() {
        return Err(Error::Precondition("expected a nonzero sextic".into()));
    }
    if let Some(k) = z.points().iter().position(|p| !f.eval(p).is_zero()) {
        return Err(Error::Precondition(format!(
            "the sextic does not vanish at point {}",
            k + 1
        )));
    }
    let (g, hb) = hilbert_burch(z)?;
    let n3 = space_dim(3);
    let mut cols = Vec::with_capacity(4 * n3);
    for gj in &g {
        for m in monomial_basis(3) {
            cols.push(gj.mul(&Form::monomial(m, Scalar::one())).coeffs().to_vec());
        }
    }
    let m = linalg::transpose(&cols, space_dim(6));
    let sol = linalg::solve(&Rationals, &m, 4 * n3, f.coeffs()).ok_or_else(|| {
        Error::Precondition("the sextic is not in the ideal of the points".into())
    })?;
    let entries = (0..4)
        .map(|j| {
            let c = Form::from_coeffs(3, sol[j * n3..(j + 1) * n3].to_vec()).expect("cubic");
            std::iter::once(c)
                .chain(hb.entries()[j].iter().cloned())
                .collect()
        })
        .collect();
    Presentation::new(vec![-3, -1, -1, -1], vec![0; 4], entries)
}

/// The free entries of the `X5` normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X5Stars {
    pub f1: Form,
    pub q: Form,
    pub p: Form,
    pub f2: Form,
}

impl X5Stars {
    pub fn random<R: Rng + ?Sized>(rng: &mut R, height: i64) -> Self {
        X5Stars {
            f1: Form::random(3, rng, height),
            q: Form::random(2, rng, height),
            p: Form::random(4, rng, height),
            f2: Form::random(3, rng, height),
        }
    }
}

/// `[[q1, l1, 0], [f1, q, l2], [p, f2, q2]]` from `O(-3) ⊕ O(-2) ⊕ O(-1)` to
/// `O(-1) ⊕ O ⊕ O(1)`.
pub fn x5_normal_form<R: Rng + ?Sized>(
    q1: &Form,
    l1: &Form,
    q2: &Form,
    l2: &Form,
    stars: Option<X5Stars>,
    rng: &mut R,
    height: i64,
) -> Result<Presentation> {
    for (name, l, q) in [("l1", l1, q1), ("l2", l2, q2)] {
        if l.degree() != 1 || q.degree() != 2 {
            return Err(Error::Precondition(format!(
                "{name} must be linear and its partner quadratic"
            )));
        }
        if l.is_zero() {
            return Err(Error::Precondition(format!("{name} is zero")));
        }
        if q.divide_exact(l).is_some() {
            return Err(Error::Precondition(format!("{name} divides its quadric")));
        }
    }
    let s = stars.unwrap_or_else(|| X5Stars::random(rng, height));
    Presentation::new(
        vec![-3, -2, -1],
        vec![-1, 0, 1],
        vec![
            vec![q1.clone(), l1.clone(), Form::zero(0)],
            vec![s.f1, s.q, l2.clone()],
            vec![s.p, s.f2, q2.clone()],
        ],
    )
}

/// `[[a, b, 0], [φ21, c], [φ21, d]]` from `2 O(-3) ⊕ O` to `O(-2) ⊕ 2 O(1)`.
/// `phi21` is given row by row.
pub fn x6_from_blocks(
    phi11: [Form; 2],
    phi22: [Form; 2],
    phi21: [[Form; 2]; 2],
) -> Result<Presentation> {
    for (name, pair) in [("φ11", &phi11), ("φ22", &phi22)] {
        if pair.iter().any(|l| l.degree() != 1) || span_dimension(pair)? != 2 {
            return Err(Error::Precondition(format!(
                "{name} needs two independent linear forms"
            )));
        }
    }
    let [a, b] = phi11;
    let [c, d] = phi22;
    let [[e, f], [g, h]] = phi21;
    let p = Presentation::new(
        vec![-3, -3, 0],
        vec![-2, 1, 1],
        vec![vec![a, b, Form::zero(-2)], vec![e, f, c], vec![g, h, d]],
    )?;
    let s = sigma_membership(
        &p.block(1..3, 0..2),
        &p.block(0..1, 0..2),
        &p.block(1..3, 2..3),
    )?;
    if s.is_some() {
        return Err(Error::Precondition("φ21 lies in v φ11 + φ22 u".into()));
    }
    Ok(p)
}

/// `X6` normal form: `φ11` spans the linear forms through `p1`, `φ22` those
/// through `p2`. Random quartics are resampled until they avoid the
/// excluded subspace; given ones are checked.
pub fn x6_normal_form<R: Rng + ?Sized>(
    p1: &[Scalar; 3],
    p2: &[Scalar; 3],
    phi21: Option<[[Form; 2]; 2]>,
    rng: &mut R,
    height: i64,
) -> Result<Presentation> {
    let through = |p: &[Scalar; 3]| -> Result<[Form; 2]> {
        let z = PointSet::new(vec![p.clone()])?;
        let g = ideal_generators(&z, 1);
        Ok([g[0].clone(), g[1].clone()])
    };
    let (a, c) = (through(p1)?, through(p2)?);
    if let Some(given) = phi21 {
        return x6_from_blocks(a, c, given);
    }
    for _ in 0..RETRY_BUDGET {
        let q = [0, 1].map(|_| [0, 1].map(|_| Form::random(4, rng, height)));
        match x6_from_blocks(a.clone(), c.clone(), q) {
            Ok(p) if is_injective(&p) => return Ok(p),
            Ok(_) | Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted(RETRY_BUDGET))
}

/// Maximal minors of the Hilbert–Burch matrix.
pub fn hilbert_burch_minors(hb: &Presentation) -> Vec<Form> {
    maximal_minors(hb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_table;
    use crate::gradedmat::{compose, determinant};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[[i64; 3]]) -> PointSet {
        PointSet::new(v.iter().map(|p| p.map(int)).collect()).unwrap()
    }

    fn standard_six() -> PointSet {
        pts(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 1],
            [1, 2, 3],
            [3, 1, 2],
        ])
    }

    #[test]
    fn sextic_determinant_is_f() {
        let f = Form::parse("X^6+Y^6+Z^6", None).unwrap();
        assert_eq!(determinant(&sextic_sheaf(&f).unwrap()).unwrap(), f);
        assert!(sextic_sheaf(&Form::zero(6)).is_err());
        assert!(sextic_sheaf(&Form::x()).is_err());
    }

    #[test]
    fn generator_counts() {
        let z = standard_six();
        assert!(ideal_generators(&z, 2).is_empty());
        assert_eq!(ideal_generators(&z, 3).len(), 4);
        assert_eq!(
            ideal_generators(&pts(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]), 1).len(),
            1
        );
    }

    #[test]
    fn point_flags() {
        assert!(!standard_six().on_conic());
        assert!(!standard_six().four_collinear());
        let line = pts(&[
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [1, 2, 0],
            [0, 0, 1],
            [1, 1, 1],
        ]);
        assert!(line.four_collinear());
        assert!(line.on_conic());
        assert!(PointSet::new(vec![[int(1), int(2), int(3)], [int(2), int(4), int(6)]]).is_err());
    }

    #[test]
    fn syzygy_and_minors() {
        let z = standard_six();
        let (g, m) = hilbert_burch(&z).unwrap();
        let row = Presentation::new(vec![0; 4], vec![3], vec![g.clone()]).unwrap();
        assert!(compose(&row, &m).unwrap().is_zero());
        assert!(same_span(&hilbert_burch_minors(&m), &g).unwrap());
    }

    #[test]
    fn jz3_is_x3() {
        let z = standard_six();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = ideal_generators(&z, 3);
        let mut f = Form::zero(6);
        for gj in &g {
            f = f.add(&gj.mul(&Form::random(3, &mut rng, 3))).unwrap();
        }
        let p = twisted_ideal_sheaf(&z, &f).unwrap();
        assert_eq!(cohomology_table(&p).unwrap().as_tuple(), (0, 1, 3));
        let det = determinant(&p).unwrap();
        assert!(z.points().iter().all(|q| det.eval(q).is_zero()));
        assert!(span_dimension(&[det, f]).unwrap() == 1);
    }

    #[test]
    fn jz3_rejects_sextic_off_the_points() {
        let f = Form::parse("X^6+Y^6+Z^6", None).unwrap();
        assert!(twisted_ideal_sheaf(&standard_six(), &f).is_err());
    }

    #[test]
    fn x5_example() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = |s: &str| Form::parse(s, None).unwrap();
        let p = x5_normal_form(&f("Y*Z"), &f("X"), &f("X*Y"), &f("Z"), None, &mut rng, 5).unwrap();
        assert_eq!(cohomology_table(&p).unwrap().as_tuple(), (1, 1, 4));
        assert!(x5_normal_form(&f("X*Y"), &f("X"), &f("X*Y"), &f("Z"), None, &mut rng, 5).is_err());
    }

    #[test]
    fn x6_example() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = x6_normal_form(
            &[int(1), int(0), int(0)],
            &[int(0), int(0), int(1)],
            None,
            &mut rng,
            5,
        )
        .unwrap();
        assert_eq!(determinant(&p).unwrap().degree(), 6);
        assert_eq!(cohomology_table(&p).unwrap().as_tuple(), (2, 2, 6));
    }

    #[test]
    fn x6_rejects_proportional_phi22() {
        let q = [0, 1].map(|_| [0, 1].map(|_| Form::parse("X^4", None).unwrap()));
        let r = x6_from_blocks(
            [Form::y(), Form::z()],
            [Form::x(), Form::x().scale(&int(2))],
            q,
        );
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
