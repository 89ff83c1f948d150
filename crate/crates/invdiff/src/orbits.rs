//! Pairs of symmetric matrices attached to square roots of the class of the
//! inverse different: the π-functionals, construction of (A, B) from a datum
//! (I, α), the integrality conditions, the converse reconstruction, and
//! stabilizers.

use crate::arith::{pow_int, pow_rat, Int, Rat};
use crate::etale::{AlgebraElement, BasedIdeal, RfOrder};
use crate::forms::{monicize, BinaryForm};
use crate::linalg::{det_int, inverse_rat, is_integral_mat, rank_rat, rmul, rtranspose, rvec_mat, to_rat, IMat, RMat};
use crate::localfield::is_maximal;
use crate::zpoly::factor_over_z;
use crate::Error;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPair {
    pub a: IMat,
    pub b: IMat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtDatum {
    pub ideal: BasedIdeal,
    pub alpha: AlgebraElement,
    pub r: Rat,
}

/// Covectors (π_{n−2}, π_{n−1}) on the ζ-basis.
pub fn pi_functionals(ord: &RfOrder) -> (Vec<Rat>, Vec<Rat>) {
    let n = ord.n;
    // rows: 1, θ, …, θ^{n−2}, ζ_{n−1}
    let mut m: RMat = ord.theta_powers[..n - 1].to_vec();
    m.push(AlgebraElement::basis_vector(n, n - 1).coords);
    let inv = inverse_rat(&m).expect("basis change is triangular");
    let pi_a: Vec<Rat> = (0..n).map(|i| inv[i][n - 2].clone()).collect();
    let pi_b: Vec<Rat> = (0..n).map(|i| -inv[i][n - 1].clone()).collect();
    (pi_a, pi_b)
}

fn apply(cov: &[Rat], u: &AlgebraElement) -> Rat {
    cov.iter().zip(&u.coords).map(|(a, b)| a * b).sum()
}

impl SqrtDatum {
    /// Validates I as an R_F-module with I² ⊆ α·I_F^{n−2} and computes r.
    pub fn new(ord: &RfOrder, ideal: BasedIdeal, alpha: AlgebraElement) -> Result<SqrtDatum, Error> {
        if !ord.is_module(&ideal) {
            return Err(Error::InvalidInput("basis does not span an R_F-module".into()));
        }
        let na = ord.norm(&alpha);
        if na.is_zero() {
            return Err(Error::InvalidInput("alpha is not invertible".into()));
        }
        let target = ord.scale_ideal(&ord.power_ideal_basis(ord.n - 2)?, &alpha);
        if !target.contains(&ord.ideal_product(&ideal, &ideal)) {
            return Err(Error::NotIntegral("I^2 is not contained in alpha*I_F^(n-2)".into()));
        }
        let nk = ord.power_ideal_basis(ord.n - 2)?.norm;
        let r = &ideal.norm * &ideal.norm / (na * nk);
        if r.abs() != Rat::one() {
            return Err(Error::NotIntegral(format!("norm equation gives r = {r}")));
        }
        Ok(SqrtDatum { ideal, alpha, r })
    }

    /// (κ·I, κ²·α), basis rows scaled by κ.
    pub fn rescale(&self, ord: &RfOrder, kappa: &AlgebraElement) -> SqrtDatum {
        SqrtDatum {
            ideal: ord.scale_ideal(&self.ideal, kappa),
            alpha: ord.mul(&ord.mul(kappa, kappa), &self.alpha),
            r: self.r.clone(),
        }
    }
}

/// The datum (I_F^k, 1) for n = 2k + 2 even, or (R_F, 1) when F is monic.
pub fn trivial_datum(ord: &RfOrder) -> Result<SqrtDatum, Error> {
    let n = ord.n;
    let ideal = if n % 2 == 0 {
        ord.power_ideal_basis((n - 2) / 2)?
    } else if ord.form.f0().abs().is_one() {
        ord.unit_ideal()
    } else {
        return Err(Error::InvalidInput("no canonical datum for odd n and f_0 != ±1".into()));
    };
    SqrtDatum::new(ord, ideal, AlgebraElement::one(n))
}

pub fn construct_pair(ord: &RfOrder, d: &SqrtDatum) -> Result<SymPair, Error> {
    let n = ord.n;
    let (pa, pb) = pi_functionals(ord);
    let ainv = ord.inverse(&d.alpha).ok_or_else(|| Error::InvalidInput("alpha not invertible".into()))?;
    let betas: Vec<AlgebraElement> = (0..n).map(|i| ord.mul(&ainv, &d.ideal.row(i))).collect();
    let mut a = vec![vec![Int::zero(); n]; n];
    let mut b = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = ord.mul(&betas[i], &d.ideal.row(j));
            let (x, y) = (apply(&pb, &prod), apply(&pa, &prod));
            if !x.is_integer() || !y.is_integer() {
                return Err(Error::NotIntegral(format!("entry ({i},{j}) is {x}, {y}")));
            }
            a[i][j] = x.to_integer();
            a[j][i] = a[i][j].clone();
            b[i][j] = y.to_integer();
            b[j][i] = b[i][j].clone();
        }
    }
    let pair = SymPair { a, b };
    // det(xA + zB) = det(A)·F_mon(x,z)
    let det_a = det_int(&pair.a);
    if det_a.abs() != Int::one() {
        return Err(Error::NotIntegral(format!("det A = {det_a}")));
    }
    let mon = monicize(&ord.form)?;
    let expect: Vec<Int> = mon.coeffs.iter().map(|c| c * &det_a).collect();
    if det_pencil(&pair) != expect {
        return Err(Error::InvalidInput("pencil determinant does not match F_mon".into()));
    }
    Ok(pair)
}

/// Coefficients (c_0..c_n) of det(xA + zB) = Σ c_i x^{n−i} z^i.
pub fn det_pencil(p: &SymPair) -> Vec<Int> {
    let n = p.a.len();
    // det(A + tB) at t = 0..n, then solve the Vandermonde system
    let vals: Vec<Rat> = (0..=n)
        .map(|t| {
            let t = Int::from(t);
            let m: IMat = (0..n).map(|i| (0..n).map(|j| &p.a[i][j] + &t * &p.b[i][j]).collect()).collect();
            Rat::from_integer(det_int(&m))
        })
        .collect();
    let vander: RMat = (0..=n)
        .map(|t| (0..=n).map(|i| pow_rat(&Rat::from_integer(Int::from(t)), i as u32)).collect())
        .collect();
    let inv = inverse_rat(&vander).expect("Vandermonde on distinct nodes");
    (0..=n)
        .map(|i| {
            let c: Rat = (0..=n).map(|t| &inv[i][t] * &vals[t]).sum();
            c.to_integer()
        })
        .collect()
}

/// inv(xA + zB) = (−1)^{⌊n/2⌋}·det(xA + zB).
pub fn inv_form(p: &SymPair) -> BinaryForm {
    let n = p.a.len();
    let sign = if (n / 2) % 2 == 0 { Int::one() } else { -Int::one() };
    BinaryForm { coeffs: det_pencil(p).into_iter().map(|c| c * &sign).collect() }
}

/// ε with det A = ε·r·(−1)^{⌊n/2⌋}.
pub fn realized_sign(p: &SymPair, r: &Rat) -> i32 {
    let n = p.a.len();
    let predicted = if (n / 2) % 2 == 0 { r.clone() } else { -r.clone() };
    let det_a = Rat::from_integer(det_int(&p.a));
    if det_a == predicted {
        1
    } else if det_a == -predicted {
        -1
    } else {
        0
    }
}

/// −A^{−1}B: the matrix of f_0·θ on the module (column convention).
pub fn theta_matrix(p: &SymPair) -> Result<RMat, Error> {
    let ainv = inverse_rat(&to_rat(&p.a)).ok_or_else(|| Error::InvalidInput("A is singular".into()))?;
    let m = rmul(&ainv, &to_rat(&p.b));
    Ok(m.into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect())
}

fn unimodular(p: &SymPair) -> Result<Int, Error> {
    let d = det_int(&p.a);
    if d.abs() != Int::one() {
        return Err(Error::InvalidInput(format!("det A = {d} is not a unit")));
    }
    Ok(d)
}

/// The form F with F_mon = det(A)·det(xA + zB), when its coefficients are integral.
fn form_from_pair(p: &SymPair, f0: &Int) -> Result<Option<BinaryForm>, Error> {
    let d = unimodular(p)?;
    let mon: Vec<Int> = det_pencil(p).into_iter().map(|c| c * &d).collect();
    let mut coeffs = vec![f0.clone()];
    for (i, c) in mon.iter().enumerate().skip(1) {
        let den = pow_int(f0, (i - 1) as u32);
        if !(c % &den).is_zero() {
            return Ok(None);
        }
        coeffs.push(c / den);
    }
    Ok(Some(BinaryForm { coeffs }))
}

fn mat_poly_p(coeffs: &[Int], t: &RMat, i: usize) -> RMat {
    // p_i(T) = Σ_{j<i} f_j T^{i−j}
    let n = t.len();
    let mut acc = vec![vec![Rat::zero(); n]; n];
    let mut pw = t.clone();
    for k in 1..=i {
        let c = Rat::from_integer(coeffs[i - k].clone());
        for r in 0..n {
            for s in 0..n {
                acc[r][s] += &c * &pw[r][s];
            }
        }
        pw = rmul(&pw, t);
    }
    acc
}

/// Integrality conditions: p_i((1/f_0)·(−A^{−1}B)) integral for 1 ≤ i ≤ n−1.
pub fn check_conditions(p: &SymPair, f0: &Int) -> Result<bool, Error> {
    if f0.is_zero() {
        return Err(Error::InvalidInput("f_0 = 0".into()));
    }
    let Some(form) = form_from_pair(p, f0)? else {
        return Ok(false);
    };
    let n = p.a.len();
    let f0r = Rat::from_integer(f0.clone());
    let t: RMat = theta_matrix(p)?.into_iter().map(|row| row.into_iter().map(|x| x / &f0r).collect()).collect();
    Ok((1..n).all(|i| is_integral_mat(&mat_poly_p(&form.coeffs, &t, i))))
}

/// Cyclic-vector candidates: standard basis, then {−1,0,1} vectors, then
/// seeded random small vectors (at most 1000).
fn cyclic_candidates(n: usize, seed: u64) -> impl Iterator<Item = Vec<i64>> {
    let std = (0..n).map(move |i| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>());
    let total = 3usize.pow(n as u32);
    let ternary = (0..total).filter_map(move |mut k| {
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (k % 3) as i64 - 1;
                k /= 3;
                d
            })
            .collect();
        let nz = v.iter().filter(|&&x| x != 0).count();
        (nz >= 2).then_some(v)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..1000).map(move |_| (0..n).map(|_| rng.gen_range(-5i64..=5)).collect::<Vec<_>>());
    std.chain(ternary).chain(random)
}

pub fn recover_datum(p: &SymPair, f: &BinaryForm) -> Result<SqrtDatum, Error> {
    recover_datum_seeded(p, f, 0)
}

pub fn recover_datum_seeded(p: &SymPair, f: &BinaryForm, seed: u64) -> Result<SqrtDatum, Error> {
    let n = f.degree();
    if p.a.len() != n {
        return Err(Error::InvalidInput("pair size does not match degree".into()));
    }
    let d = unimodular(p)?;
    let mon = monicize(f)?;
    let pencil: Vec<Int> = det_pencil(p).into_iter().map(|c| c * &d).collect();
    if pencil != mon.coeffs {
        return Err(Error::InvalidInput("inv(xA+zB) is not ±F_mon".into()));
    }
    if !check_conditions(p, f.f0())? {
        return Err(Error::InvalidInput("integrality conditions fail".into()));
    }
    let ord = RfOrder::new(f)?;
    let m = theta_matrix(p)?;
    let mut found = None;
    for v in cyclic_candidates(n, seed) {
        // Krylov columns v, Mv, …, M^{n−1}v stored as rows
        let mut cols: RMat = Vec::with_capacity(n);
        let mut cur: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect();
        for _ in 0..n {
            cols.push(cur.clone());
            cur = (0..n).map(|i| (0..n).map(|j| &m[i][j] * &cur[j]).sum()).collect();
        }
        if let Some(inv) = inverse_rat(&rtranspose(&cols)) {
            found = Some(inv);
            break;
        }
    }
    let kinv = found.ok_or(Error::CyclicVectorExhausted)?;
    // e_j = Σ_k c_{jk} M^k v  ↔  β_j = Σ_k c_{jk} (f_0 θ)^k
    let f0 = ord.f0();
    let scaled: RMat = (0..n).map(|k| ord.theta_powers[k].iter().map(|x| x * pow_rat(&f0, k as u32)).collect()).collect();
    let betas: Vec<AlgebraElement> =
        (0..n).map(|j| AlgebraElement::new(rvec_mat(&(0..n).map(|k| kinv[k][j].clone()).collect::<Vec<_>>(), &scaled))).collect();
    // α' from entries A_{ij} = π_{n−1}(α'·β_i·β_j); the first row alone is
    // singular when β_1 is a zero divisor, so pick independent equations greedily
    let (pa, pb) = pi_functionals(&ord);
    let mut sys: RMat = Vec::with_capacity(n);
    let mut rhs: Vec<Rat> = Vec::with_capacity(n);
    'pick: for i in 0..n {
        for j in i..n {
            let bb = ord.mul(&betas[i], &betas[j]);
            let row: Vec<Rat> = (0..n).map(|l| apply(&pb, &ord.mul(&AlgebraElement::basis_vector(n, l), &bb))).collect();
            sys.push(row);
            if rank_rat(&sys) < sys.len() {
                sys.pop();
                continue;
            }
            rhs.push(Rat::from_integer(p.a[i][j].clone()));
            if sys.len() == n {
                break 'pick;
            }
        }
    }
    let sinv = inverse_rat(&sys).ok_or_else(|| Error::InvalidInput("degenerate trace system".into()))?;
    let alpha_p = AlgebraElement::new((0..n).map(|l| (0..n).map(|j| &sinv[l][j] * &rhs[j]).sum()).collect());
    for i in 0..n {
        for j in 0..n {
            let e = ord.mul(&alpha_p, &ord.mul(&betas[i], &betas[j]));
            if apply(&pb, &e) != Rat::from_integer(p.a[i][j].clone()) || apply(&pa, &e) != Rat::from_integer(p.b[i][j].clone()) {
                return Err(Error::InvalidInput("pair is not in the image of the construction".into()));
            }
        }
    }
    let alpha = ord.inverse(&alpha_p).ok_or_else(|| Error::InvalidInput("alpha' not invertible".into()))?;
    let ideal = BasedIdeal::new(betas.into_iter().map(|b| b.coords).collect());
    SqrtDatum::new(&ord, ideal, alpha)
}

/// κ with κ·I₁ = I₂ (as modules) and κ²·α₁ = α₂, searched among ratios of
/// basis elements up to sign, then among ratios Σc_iβ'_i / Σc_iβ_i with
/// c ∈ {−1,0,1}ⁿ (needed when basis elements are zero divisors).
pub fn equivalence_witness(ord: &RfOrder, d1: &SqrtDatum, d2: &SqrtDatum) -> Option<AlgebraElement> {
    let n = ord.n;
    let l2 = d2.ideal.lattice();
    let test = |base: AlgebraElement| {
        for sign in [1i64, -1] {
            let kappa = base.scale(&Rat::from_integer(Int::from(sign)));
            if ord.mul(&ord.mul(&kappa, &kappa), &d1.alpha) != d2.alpha {
                continue;
            }
            if ord.scale_ideal(&d1.ideal, &kappa).lattice() == l2 {
                return Some(kappa);
            }
        }
        None
    };
    for i in 0..n {
        let Some(inv) = ord.inverse(&d1.ideal.row(i)) else { continue };
        for j in 0..n {
            if let Some(k) = test(ord.mul(&d2.ideal.row(j), &inv)) {
                return Some(k);
            }
        }
    }
    for mut k in 0..3usize.pow(n as u32) {
        let mut x = AlgebraElement::new(vec![Rat::zero(); n]);
        let mut y = x.clone();
        for i in 0..n {
            let c = Rat::from_integer(Int::from((k % 3) as i64 - 1));
            k /= 3;
            x = x.add(&d1.ideal.row(i).scale(&c));
            y = y.add(&d2.ideal.row(i).scale(&c));
        }
        let Some(inv) = ord.inverse(&x) else { continue };
        if let Some(k) = test(ord.mul(&y, &inv)) {
            return Some(k);
        }
    }
    None
}

/// Transport a datum for F to F' = F(x + s·z, z) through θ = θ' + s.
pub fn transport_datum(ord: &RfOrder, shifted: &RfOrder, s: &Int, d: &SqrtDatum) -> SqrtDatum {
    let t = ord.translation_matrix(shifted, s);
    SqrtDatum {
        ideal: BasedIdeal::new(rmul(&d.ideal.basis, &t)),
        alpha: AlgebraElement::new(rvec_mat(&d.alpha.coords, &t)),
        r: d.r.clone(),
    }
}

/// (A, f_0·s·A + B): the pair expected for the translated form.
pub fn translate_pair(p: &SymPair, f0: &Int, s: &Int) -> SymPair {
    let k = f0 * s;
    let b = p.a.iter().zip(&p.b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| &k * x + y).collect()).collect();
    SymPair { a: p.a.clone(), b }
}

/// A-self-adjointness of T = −A^{−1}B: Tᵀ·A = A·T.
pub fn is_self_adjoint(p: &SymPair) -> Result<bool, Error> {
    let t = theta_matrix(p)?;
    let a = to_rat(&p.a);
    Ok(rmul(&rtranspose(&t), &a) == rmul(&a, &t))
}

/// Number of irreducible factors of F over ℚ (z counted when f_0 = 0).
pub fn rational_factor_count(f: &BinaryForm) -> usize {
    let dehom: Vec<Int> = f.coeffs.iter().rev().cloned().collect();
    let facs = factor_over_z(&dehom);
    let zpart = f.degree() - facs.iter().map(|(g, e)| (g.len() - 1) * *e as usize).sum::<usize>();
    facs.len() + usize::from(zpart > 0)
}

/// Size of the stabilizer for a maximal R_F: 2^{m−1} for odd n, 2^m for even n.
pub fn stabilizer_size_maximal(f: &BinaryForm) -> Result<u64, Error> {
    if !is_maximal(f)? {
        return Err(Error::Unproven(
            "R_F is not maximal; use the finite-field census or module endomorphisms".into(),
        ));
    }
    let m = rational_factor_count(f) as u32;
    Ok(if f.degree() % 2 == 1 { 1 << (m - 1) } else { 1 << m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn im(rows: &[&[i64]]) -> IMat {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn pi_on_monic_cubic() {
        let (a, b, c) = (3i64, -4, 7);
        let ord = RfOrder::new(&BinaryForm::from_i64(&[1, a, b, c])).unwrap();
        let (p1, p2) = pi_functionals(&ord);
        for (u, v, w) in [(1i64, 0, 0), (0, 1, 0), (0, 0, 1), (2, -3, 5)] {
            let x = AlgebraElement::scalar(3, rat(u, 1))
                .add(&ord.theta().scale(&rat(v, 1)))
                .add(&ord.theta_power(2).scale(&rat(w, 1)));
            assert_eq!(apply(&p2, &x), rat(-w, 1));
            assert_eq!(apply(&p1, &x), rat(v - a * w, 1));
        }
    }

    #[test]
    fn pi_compatibility() {
        let ord = RfOrder::new(&BinaryForm::from_i64(&[7, 10, 5, 6])).unwrap();
        let (pa, pb) = pi_functionals(&ord);
        let ft = ord.theta().scale(&ord.f0());
        for c in [[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [3, -1, 4]] {
            let rho = AlgebraElement::from_ints(&c);
            assert_eq!(apply(&pb, &ord.mul(&rho, &ft)), -apply(&pa, &rho));
        }
        assert_eq!(apply(&pb, &AlgebraElement::basis_vector(3, 2)), rat(-1, 1));
    }

    #[test]
    fn golden_cubic() {
        let (a, b, c) = (2i64, -5, 3);
        let ord = RfOrder::new(&BinaryForm::from_i64(&[1, a, b, c])).unwrap();
        let d = trivial_datum(&ord).unwrap();
        let pair = construct_pair(&ord, &d).unwrap();
        assert_eq!(pair.a, im(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, b]]));
        assert_eq!(pair.b, im(&[&[0, 1, 0], &[1, -a, -b], &[0, -b, -c]]));
        assert_eq!(det_int(&pair.a), int(1));
        assert_eq!(realized_sign(&pair, &d.r), -1);
        assert_eq!(inv_form(&pair).coeffs, vec![int(-1), int(-a), int(-b), int(-c)]);
        let back = recover_datum(&pair, &ord.form).unwrap();
        assert!(equivalence_witness(&ord, &d, &back).is_some());
        assert!(is_self_adjoint(&pair).unwrap());
    }

    #[test]
    fn inv_form_diagonal() {
        let p = SymPair { a: im(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), b: im(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]) };
        // −(x+z)(x+2z)(x+3z)
        assert_eq!(inv_form(&p).coeffs, vec![int(-1), int(-6), int(-11), int(-6)]);
        assert!(check_conditions(&p, &int(1)).unwrap());
    }

    #[test]
    fn even_degree_datum_with_f0() {
        let ord = RfOrder::new(&BinaryForm::from_i64(&[7, 3, -2, 5, 1])).unwrap();
        let d = trivial_datum(&ord).unwrap();
        let pair = construct_pair(&ord, &d).unwrap();
        assert!(check_conditions(&pair, &int(7)).unwrap());
        let back = recover_datum(&pair, &ord.form).unwrap();
        assert!(equivalence_witness(&ord, &d, &back).is_some());
    }

    #[test]
    fn rescaled_datum_same_pair() {
        let ord = RfOrder::new(&BinaryForm::from_i64(&[1, 0, -3, 1])).unwrap();
        let d = trivial_datum(&ord).unwrap();
        let kappa = AlgebraElement::from_ints(&[2, 1, 0]);
        let d2 = d.rescale(&ord, &kappa);
        assert_eq!(construct_pair(&ord, &d).unwrap(), construct_pair(&ord, &d2).unwrap());
        assert!(equivalence_witness(&ord, &d, &d2).is_some());
    }

    #[test]
    fn functoriality_monic() {
        let f = BinaryForm::from_i64(&[1, 2, -1, 4]);
        let s = int(-2);
        let g = crate::forms::m1_act(&f, &s, &int(1));
        let (o1, o2) = (RfOrder::new(&f).unwrap(), RfOrder::new(&g).unwrap());
        let d = trivial_datum(&o1).unwrap();
        let p1 = construct_pair(&o1, &d).unwrap();
        let p2 = construct_pair(&o2, &transport_datum(&o1, &o2, &s, &d)).unwrap();
        assert_eq!(p2, translate_pair(&p1, &int(1), &s));
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_size_maximal(&BinaryForm::from_i64(&[1, 0, -1, -1])), Ok(1));
        // x⁴ − x − 1: disc −283, squarefree
        assert_eq!(stabilizer_size_maximal(&BinaryForm::from_i64(&[1, 0, 0, -1, -1])), Ok(2));
        assert!(stabilizer_size_maximal(&BinaryForm::from_i64(&[1, 0, 0, -8])).is_err());
        // (x³ − x − 1)(x³ − x + 1)
        let g = crate::zpoly::mul(&crate::zpoly::from_i64(&[-1, -1, 0, 1]), &crate::zpoly::from_i64(&[1, -1, 0, 1]));
        let f = BinaryForm { coeffs: g.into_iter().rev().collect() };
        assert_eq!(rational_factor_count(&f), 2);
    }
}
