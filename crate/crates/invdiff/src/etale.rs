//! The ring R_F on the basis (1, ζ_1, …, ζ_{n-1}), arithmetic in
//! K_F = ℚ[x]/(F(x,1)), the ideals I_F^k and based fractional ideals.

use crate::arith::{pow_rat, Int, Rat};
use crate::forms::{discriminant, BinaryForm};
use crate::linalg::{det_rat, inverse_rat, rmul, rvec_mat, Lattice, RMat};
use crate::Error;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct RfOrder {
    pub form: BinaryForm,
    pub n: usize,
    /// table[i][j] = coordinates of ζ_i·ζ_j, indices 0..n with ζ_0 = 1.
    pub table: Vec<Vec<Vec<Int>>>,
    /// row j = coordinates of θ^j in the ζ-basis.
    pub theta_powers: RMat,
    /// row i = coefficients of p_i(θ) = ζ_i in the θ-power basis.
    pub zeta_in_theta: RMat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedIdeal {
    pub basis: RMat,
    pub norm: Rat,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rat>) -> AlgebraElement {
        AlgebraElement { coords }
    }

    pub fn from_ints(c: &[i64]) -> AlgebraElement {
        AlgebraElement { coords: c.iter().map(|&x| Rat::from_integer(Int::from(x))).collect() }
    }

    pub fn scalar(n: usize, c: Rat) -> AlgebraElement {
        let mut v = vec![Rat::zero(); n];
        v[0] = c;
        AlgebraElement { coords: v }
    }

    pub fn one(n: usize) -> AlgebraElement {
        AlgebraElement::scalar(n, Rat::one())
    }

    pub fn basis_vector(n: usize, i: usize) -> AlgebraElement {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        AlgebraElement { coords: v }
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

/// Structure constants for ζ_iζ_j, 1 ≤ i ≤ j ≤ n−1.
fn zeta_product(f: &[Int], n: usize, i: usize, j: usize) -> Vec<Int> {
    let mut out = vec![Int::zero(); n];
    // ζ_k for k = n is the constant −f_n
    let mut put = |k: usize, c: Int| {
        if k == n {
            out[0] -= c * &f[n];
        } else {
            out[k] += c;
        }
    };
    for k in j + 1..=(i + j).min(n) {
        put(k, f[i + j - k].clone());
    }
    let lo = if i + j > n { i + j - n } else { 1 }.max(1);
    for k in lo..=i {
        put(k, -f[i + j - k].clone());
    }
    out
}

impl RfOrder {
    pub fn new(form: &BinaryForm) -> Result<RfOrder, Error> {
        if form.f0().is_zero() {
            return Err(Error::InvalidInput("R_F needs f_0 != 0".into()));
        }
        if discriminant(form).is_zero() {
            return Err(Error::InvalidInput("R_F needs a separable form".into()));
        }
        Ok(RfOrder::new_unchecked(form))
    }

    /// Builds the multiplication table without the separability check.
    pub fn new_unchecked(form: &BinaryForm) -> RfOrder {
        let n = form.degree();
        let f = &form.coeffs;
        let mut table = vec![vec![vec![Int::zero(); n]; n]; n];
        for j in 0..n {
            table[0][j][j] = Int::one();
            table[j][0][j] = Int::one();
        }
        for i in 1..n {
            for j in i..n {
                let c = zeta_product(f, n, i, j);
                table[j][i] = c.clone();
                table[i][j] = c;
            }
        }
        let mut zeta_in_theta = vec![vec![Rat::zero(); n]; n];
        zeta_in_theta[0][0] = Rat::one();
        for (i, row) in zeta_in_theta.iter_mut().enumerate().skip(1) {
            for (jj, fj) in f.iter().enumerate().take(i) {
                row[i - jj] = Rat::from_integer(fj.clone());
            }
        }
        let mut ord = RfOrder { form: form.clone(), n, table, theta_powers: vec![], zeta_in_theta };
        if !form.f0().is_zero() {
            // θ^{j+1} = θ^j · ζ_1 / f_0
            let f0 = Rat::from_integer(form.f0().clone());
            let theta = AlgebraElement::basis_vector(n, 1.min(n - 1)).scale(&(Rat::one() / f0));
            let mut powers = vec![AlgebraElement::one(n)];
            for _ in 1..n {
                let next = ord.mul(powers.last().unwrap(), &theta);
                powers.push(next);
            }
            ord.theta_powers = powers.into_iter().map(|e| e.coords).collect();
        }
        ord
    }

    pub fn f0(&self) -> Rat {
        Rat::from_integer(self.form.f0().clone())
    }

    pub fn mul(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let n = self.n;
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if u.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v.coords[j].is_zero() {
                    continue;
                }
                let c = &u.coords[i] * &v.coords[j];
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * Rat::from_integer(t.clone());
                    }
                }
            }
        }
        AlgebraElement { coords: out }
    }

    pub fn theta(&self) -> AlgebraElement {
        AlgebraElement::new(self.theta_powers[1].clone())
    }

    pub fn theta_power(&self, k: usize) -> AlgebraElement {
        if k < self.n {
            return AlgebraElement::new(self.theta_powers[k].clone());
        }
        let mut acc = AlgebraElement::new(self.theta_powers[self.n - 1].clone());
        for _ in self.n - 1..k {
            acc = self.mul(&acc, &self.theta());
        }
        acc
    }

    /// Row k = coordinates of ζ_k·u.
    pub fn mult_matrix(&self, u: &AlgebraElement) -> RMat {
        (0..self.n).map(|k| self.mul(&AlgebraElement::basis_vector(self.n, k), u).coords).collect()
    }

    pub fn norm(&self, u: &AlgebraElement) -> Rat {
        det_rat(&self.mult_matrix(u))
    }

    pub fn trace(&self, u: &AlgebraElement) -> Rat {
        let m = self.mult_matrix(u);
        (0..self.n).map(|i| m[i][i].clone()).sum()
    }

    pub fn inverse(&self, u: &AlgebraElement) -> Option<AlgebraElement> {
        let inv = inverse_rat(&self.mult_matrix(u))?;
        let mut e = vec![Rat::zero(); self.n];
        e[0] = Rat::one();
        Some(AlgebraElement::new(rvec_mat(&e, &inv)))
    }

    /// Coordinates in the θ-power basis.
    pub fn to_theta_coords(&self, u: &AlgebraElement) -> Vec<Rat> {
        rvec_mat(&u.coords, &self.zeta_in_theta)
    }

    pub fn from_theta_coords(&self, c: &[Rat]) -> AlgebraElement {
        AlgebraElement::new(rvec_mat(c, &self.theta_powers))
    }

    pub fn power_ideal_basis(&self, k: usize) -> Result<BasedIdeal, Error> {
        if k >= self.n {
            return Err(Error::InvalidInput(format!("I_F^k needs 0 <= k <= n-1, got {k}")));
        }
        let mut rows = Vec::with_capacity(self.n);
        for j in 0..=k {
            rows.push(self.theta_powers[j].clone());
        }
        for j in k + 1..self.n {
            rows.push(AlgebraElement::basis_vector(self.n, j).coords);
        }
        Ok(BasedIdeal::new(rows))
    }

    pub fn unit_ideal(&self) -> BasedIdeal {
        BasedIdeal::new((0..self.n).map(|j| AlgebraElement::basis_vector(self.n, j).coords).collect())
    }

    pub fn principal_ideal(&self, u: &AlgebraElement) -> BasedIdeal {
        BasedIdeal::new(self.mult_matrix(u))
    }

    /// ζ_i·(row j) in the row span for all i, j.
    pub fn is_module(&self, ideal: &BasedIdeal) -> bool {
        let lat = ideal.lattice();
        ideal.basis.iter().all(|row| {
            let b = AlgebraElement::new(row.clone());
            (1..self.n).all(|i| lat.contains(&self.mul(&AlgebraElement::basis_vector(self.n, i), &b).coords))
        })
    }

    pub fn ideal_from_generators(&self, gens: &RMat) -> Result<BasedIdeal, Error> {
        // close under multiplication by the ζ_i
        let mut all = gens.clone();
        for g in gens {
            let e = AlgebraElement::new(g.clone());
            for i in 1..self.n {
                all.push(self.mul(&AlgebraElement::basis_vector(self.n, i), &e).coords);
            }
        }
        let lat = Lattice::from_generators(&all)
            .ok_or_else(|| Error::InvalidInput("generators do not span a full-rank module".into()))?;
        Ok(BasedIdeal::from_lattice(&lat))
    }

    pub fn ideal_product(&self, a: &BasedIdeal, b: &BasedIdeal) -> BasedIdeal {
        let mut gens = Vec::with_capacity(self.n * self.n);
        for r in &a.basis {
            let x = AlgebraElement::new(r.clone());
            for s in &b.basis {
                gens.push(self.mul(&x, &AlgebraElement::new(s.clone())).coords);
            }
        }
        let lat = Lattice::from_generators(&gens).expect("product of fractional ideals has full rank");
        BasedIdeal::from_lattice(&lat)
    }

    pub fn scale_ideal(&self, a: &BasedIdeal, k: &AlgebraElement) -> BasedIdeal {
        BasedIdeal::new(rmul(&a.basis, &self.mult_matrix(k)))
    }

    /// (A : B) = {x : x·B ⊆ A}.
    pub fn colon(&self, a: &BasedIdeal, b: &BasedIdeal) -> BasedIdeal {
        let mut acc: Option<Lattice> = None;
        for r in &b.basis {
            let inv = self.inverse(&AlgebraElement::new(r.clone())).expect("ideal basis element invertible");
            let l = self.scale_ideal(a, &inv).lattice();
            acc = Some(match acc {
                None => l,
                Some(x) => x.intersect(&l),
            });
        }
        BasedIdeal::from_lattice(&acc.expect("nonempty basis"))
    }

    pub fn is_invertible(&self, a: &BasedIdeal) -> bool {
        let inv = self.colon(&self.unit_ideal(), a);
        self.ideal_product(a, &inv).lattice() == self.unit_ideal().lattice()
    }

    pub fn ideal_norm(&self, a: &BasedIdeal) -> Rat {
        det_rat(&a.basis)
    }

    /// Matrix sending ζ-coordinates for F to ζ'-coordinates for
    /// F' = F(x + s·z, z), induced by θ = θ' + s.
    pub fn translation_matrix(&self, shifted: &RfOrder, s: &Int) -> RMat {
        let n = self.n;
        let s = Rat::from_integer(s.clone());
        // θ^j = Σ_m C(j,m) s^{j-m} θ'^m
        let mut subst = vec![vec![Rat::zero(); n]; n];
        for (j, row) in subst.iter_mut().enumerate() {
            let mut binom = Int::one();
            for m in 0..=j {
                row[m] = Rat::from_integer(binom.clone()) * pow_rat(&s, (j - m) as u32);
                binom = binom * Int::from(j - m) / Int::from(m + 1);
            }
        }
        rmul(&rmul(&self.zeta_in_theta, &subst), &shifted.theta_powers)
    }
}

impl BasedIdeal {
    pub fn new(basis: RMat) -> BasedIdeal {
        let norm = det_rat(&basis);
        BasedIdeal { basis, norm }
    }

    pub fn from_lattice(l: &Lattice) -> BasedIdeal {
        BasedIdeal::new(l.basis())
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::from_generators(&self.basis).expect("ideal basis is invertible")
    }

    pub fn same_module(&self, other: &BasedIdeal) -> bool {
        self.lattice() == other.lattice()
    }

    pub fn contains(&self, other: &BasedIdeal) -> bool {
        self.lattice().contains_lattice(&other.lattice())
    }

    pub fn row(&self, i: usize) -> AlgebraElement {
        AlgebraElement::new(self.basis[i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::poly::QPoly;

    fn simon() -> RfOrder {
        RfOrder::new(&BinaryForm::from_i64(&[7, 10, 5, 6])).unwrap()
    }

    /// Independent oracle: multiply through θ-polynomials reduced mod F(x,1).
    fn mul_via_poly(ord: &RfOrder, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let pu = QPoly::new(ord.to_theta_coords(u));
        let pv = QPoly::new(ord.to_theta_coords(v));
        let r = pu.mul(&pv).rem(&ord.form.dehomogenize());
        let c: Vec<Rat> = (0..ord.n).map(|i| r.coeff(i)).collect();
        ord.from_theta_coords(&c)
    }

    #[test]
    fn cubic_table_entries() {
        let f = BinaryForm::from_i64(&[3, -2, 5, 11]);
        let o = RfOrder::new(&f).unwrap();
        // ζ_1² = f_0 ζ_2 − f_1 ζ_1
        assert_eq!(o.table[1][1], vec![int(0), int(2), int(3)]);
        // ζ_1 ζ_2 = −f_0 f_3 − f_2 ζ_1
        assert_eq!(o.table[1][2], vec![int(-33), int(-5), int(0)]);
    }

    #[test]
    fn table_matches_polynomial_arithmetic() {
        for c in [&[7i64, 10, 5, 6][..], &[2, -3, 0, 5, 1], &[-5, 1, 2, -7, 3, 4], &[3, 0, 0, 0, 0, 0, -1]] {
            let o = RfOrder::new(&BinaryForm::from_i64(c)).unwrap();
            for i in 0..o.n {
                for j in 0..o.n {
                    let a = AlgebraElement::basis_vector(o.n, i);
                    let b = AlgebraElement::basis_vector(o.n, j);
                    assert_eq!(o.mul(&a, &b), mul_via_poly(&o, &a, &b), "{c:?} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn theta_power_consistency() {
        let o = simon();
        // θ-powers from repeated multiplication invert the p_i table
        assert_eq!(rmul(&o.zeta_in_theta, &o.theta_powers), crate::linalg::ridentity(3));
        // ζ_1 = f_0 θ
        assert_eq!(o.theta().scale(&rat(7, 1)), AlgebraElement::basis_vector(3, 1));
    }

    #[test]
    fn x3_minus_2() {
        let o = RfOrder::new(&BinaryForm::from_i64(&[1, 0, 0, -2])).unwrap();
        let th = o.theta();
        let th2 = o.theta_power(2);
        assert_eq!(o.mul(&th, &th2), AlgebraElement::scalar(3, rat(2, 1)));
        let e = AlgebraElement::one(3).add(&th);
        assert_eq!(o.norm(&e), rat(3, 1));
        assert_eq!(o.norm(&AlgebraElement::one(3)), rat(1, 1));
    }

    #[test]
    fn power_ideal_norms() {
        let o = simon();
        assert_eq!(o.power_ideal_basis(0).unwrap().norm, rat(1, 1));
        assert_eq!(o.power_ideal_basis(1).unwrap().norm, rat(1, 7));
        assert_eq!(o.power_ideal_basis(2).unwrap().norm, rat(1, 49));
        assert!(o.power_ideal_basis(3).is_err());
        let i1 = o.power_ideal_basis(1).unwrap();
        let i2 = o.power_ideal_basis(2).unwrap();
        assert!(o.ideal_product(&i1, &i1).same_module(&i2));
        assert!(o.is_module(&i1) && o.is_module(&i2));
        let r = o.unit_ideal();
        assert!(o.ideal_product(&r, &i1).same_module(&i1));
    }

    #[test]
    fn colon_and_invertibility() {
        let o = simon();
        let i1 = o.power_ideal_basis(1).unwrap();
        assert!(o.is_invertible(&i1));
        let inv = o.colon(&o.unit_ideal(), &i1);
        assert_eq!(num_traits::Signed::abs(&o.ideal_norm(&inv)), rat(7, 1));
    }

    #[test]
    fn translation_respects_multiplication() {
        let f = BinaryForm::from_i64(&[7, 10, 5, 6]);
        let s = int(3);
        let g = crate::forms::m1_act(&f, &s, &int(1));
        let (o, o2) = (RfOrder::new(&f).unwrap(), RfOrder::new(&g).unwrap());
        let t = o.translation_matrix(&o2, &s);
        // integral basis goes to integral basis with det 1
        assert!(crate::linalg::is_integral_mat(&t));
        assert_eq!(det_rat(&t), rat(1, 1));
        let u = AlgebraElement::from_ints(&[1, -2, 3]);
        let v = AlgebraElement::from_ints(&[4, 0, -1]);
        let tu = AlgebraElement::new(rvec_mat(&u.coords, &t));
        let tv = AlgebraElement::new(rvec_mat(&v.coords, &t));
        let tuv = AlgebraElement::new(rvec_mat(&o.mul(&u, &v).coords, &t));
        assert_eq!(o2.mul(&tu, &tv), tuv);
    }
}
