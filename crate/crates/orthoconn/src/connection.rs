//! Connection matrices between `P^{tau kappa}(tau .)` and `P^kappa`, by the
//! Gram route, and checks of their structural identities.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::{sign_of, sum_sqrt_terms, QSqrt, Scalar};
use crate::multipoly::{MultiIndex, SparsePoly};
use crate::report::Report;
use crate::simplex_jacobi::{enumerate_basis, jacobi_simplex_basis, norm_a, permute_vars, KappaParams, Moments, Permutation};

/// Square matrix `c^tau_{nu,mu}(kappa)` over `{|nu| = n}` in basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnMatrix<S> {
    pub d: usize,
    pub n: usize,
    pub kappa: KappaParams<S>,
    pub tau: Permutation,
    pub order: Vec<MultiIndex>,
    pub entries: Vec<Vec<S>>,
    pub normalized: Option<Vec<Vec<QSqrt<S>>>>,
}

impl<S: Scalar> ConnMatrix<S> {
    /// Fills entries from `f(nu, mu)`.
    pub fn from_fn(
        tau: &Permutation,
        kappa: &KappaParams<S>,
        n: usize,
        mut f: impl FnMut(&[usize], &[usize]) -> Result<S>,
    ) -> Result<Self> {
        let d = kappa.d();
        if tau.size() != d + 1 {
            return Err(Error::DimensionMismatch { expected: d + 1, got: tau.size() });
        }
        let order = enumerate_basis(n, d);
        let entries = order
            .iter()
            .map(|nu| order.iter().map(|mu| f(nu, mu)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(Self { d, n, kappa: kappa.clone(), tau: tau.clone(), order, entries, normalized: None })
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, nu: &[usize]) -> Option<usize> {
        self.order.iter().position(|v| v == nu)
    }

    pub fn entry(&self, nu: &[usize], mu: &[usize]) -> Option<&S> {
        Some(&self.entries[self.index_of(nu)?][self.index_of(mu)?])
    }

    /// `tau kappa`, the parameters of the permuted basis.
    pub fn tau_kappa(&self) -> KappaParams<S> {
        self.kappa.permuted(&self.tau)
    }

    /// Adds `c_hat = sign(c) sqrt(c^2 A_mu(kappa) / A_nu(tau kappa))`.
    pub fn normalize(mut self) -> Self {
        let tk = self.tau_kappa();
        let a_mu: Vec<S> = self.order.iter().map(|mu| norm_a(mu, &self.kappa)).collect();
        let a_nu: Vec<S> = self.order.iter().map(|nu| norm_a(nu, &tk)).collect();
        let norm = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| QSqrt::new(sign_of(c), c.clone() * c.clone() * a_mu[j].clone() / a_nu[i].clone()))
                    .collect()
            })
            .collect();
        self.normalized = Some(norm);
        self
    }

    /// Normalized entries, computing them if absent.
    pub fn normalized_entries(&self) -> Vec<Vec<QSqrt<S>>> {
        match &self.normalized {
            Some(n) => n.clone(),
            None => self.clone().normalize().normalized.unwrap(),
        }
    }

    /// Rows as `"p/q"` strings separated by commas.
    pub fn to_csv(&self, normalized: bool) -> String {
        let mut s = String::new();
        let header: Vec<String> = self.order.iter().map(|m| format!("\"{m:?}\"")).collect();
        s.push_str(&format!("nu,{}\n", header.join(",")));
        let norm = normalized.then(|| self.normalized_entries());
        for (i, nu) in self.order.iter().enumerate() {
            let cells: Vec<String> = match &norm {
                Some(n) => n[i].iter().map(|v| v.to_string()).collect(),
                None => self.entries[i].iter().map(|v| v.to_string()).collect(),
            };
            s.push_str(&format!("\"{nu:?}\",{}\n", cells.join(",")));
        }
        s
    }
}

impl<S: Scalar> Serialize for ConnMatrix<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = serializer.serialize_struct("ConnMatrix", 7)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("n", &self.n)?;
        let kappa: Vec<String> = self.kappa.values().iter().map(|k| k.to_string()).collect();
        st.serialize_field("kappa", &kappa)?;
        st.serialize_field("tau", &self.tau.to_string())?;
        st.serialize_field("order", &self.order)?;
        let entries: Vec<Vec<String>> =
            self.entries.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        st.serialize_field("entries", &entries)?;
        st.serialize_field("normalized", &self.normalized)?;
        st.end()
    }
}

/// `c^tau_{nu,mu} = <P_nu^{tau kappa}(tau .), P_mu^kappa> / A_mu(kappa)`.
pub fn gram_connection<S: Scalar>(tau: &Permutation, kappa: &KappaParams<S>, n: usize) -> Result<ConnMatrix<S>> {
    let d = kappa.d();
    let order = enumerate_basis(n, d);
    let tk = kappa.permuted(tau);
    let targets: Vec<SparsePoly<S>> = order.iter().map(|mu| jacobi_simplex_basis(mu, kappa)).collect::<Result<_>>()?;
    let norms: Vec<S> = order.iter().map(|mu| norm_a(mu, kappa)).collect();
    let mut moments = Moments::new(kappa);
    let mut entries = Vec::with_capacity(order.len());
    for nu in &order {
        let f = permute_vars(&jacobi_simplex_basis(nu, &tk)?, tau)?;
        entries.push(
            targets
                .iter()
                .zip(&norms)
                .map(|(p, a)| moments.inner(&f, p) / a.clone())
                .collect(),
        );
    }
    Ok(ConnMatrix { d, n, kappa: kappa.clone(), tau: tau.clone(), order, entries, normalized: None })
}

/// `P_nu^{tau kappa}(tau x) - sum_mu c_{nu,mu} P_mu^kappa(x)` vanishes identically.
pub fn verify_reconstruction<S: Scalar>(m: &ConnMatrix<S>) -> Result<Report> {
    let mut rep = Report::new(format!("reconstruction tau={} n={}", m.tau, m.n));
    let tk = m.tau_kappa();
    let basis: Vec<SparsePoly<S>> = m.order.iter().map(|mu| jacobi_simplex_basis(mu, &m.kappa)).collect::<Result<_>>()?;
    for (i, nu) in m.order.iter().enumerate() {
        let mut r = permute_vars(&jacobi_simplex_basis(nu, &tk)?, &m.tau)?;
        for (c, p) in m.entries[i].iter().zip(&basis) {
            r = &r - &p.scale(c);
        }
        rep.check(r.is_zero(), || format!("nu={nu:?}: residual has {} terms", r.len()));
    }
    Ok(rep)
}

/// Row and column orthogonality in unnormalized rational form:
/// `sum_w c_{nu,w} c_{mu,w} A_w(kappa) = delta A_nu(tau kappa)` and
/// `sum_nu c_{nu,mu} c_{nu,mu'} / A_nu(tau kappa) = delta / A_mu(kappa)`.
pub fn verify_orthogonality<S: Scalar>(m: &ConnMatrix<S>) -> Report {
    let mut rep = Report::new(format!("orthogonality tau={} n={}", m.tau, m.n));
    let tk = m.tau_kappa();
    let a: Vec<S> = m.order.iter().map(|w| norm_a(w, &m.kappa)).collect();
    let at: Vec<S> = m.order.iter().map(|w| norm_a(w, &tk)).collect();
    let k = m.size();
    for i in 0..k {
        for j in i..k {
            let mut s = S::zero();
            for w in 0..k {
                s = s + m.entries[i][w].clone() * m.entries[j][w].clone() * a[w].clone();
            }
            let e = if i == j { at[i].clone() } else { S::zero() };
            rep.check(s == e, || format!("rows {:?},{:?}: {s} != {e}", m.order[i], m.order[j]));
            let mut s = S::zero();
            for v in 0..k {
                s = s + m.entries[v][i].clone() * m.entries[v][j].clone() / at[v].clone();
            }
            let e = if i == j { S::one() / a[i].clone() } else { S::zero() };
            rep.check(s == e, || format!("columns {:?},{:?}: {s} != {e}", m.order[i], m.order[j]));
        }
    }
    rep
}

/// Given `m = c^tau(kappa)` and `inv = c^{tau^-1}(tau kappa)`, checks the
/// inverse relation `c_hat^{tau^-1}_{nu,mu}(tau kappa) = c_hat^tau_{mu,nu}(kappa)`
/// in the rational form
/// `c^{tau^-1}_{nu,mu}(tau kappa) A_mu(tau kappa) = c^tau_{mu,nu}(kappa) A_nu(kappa)`.
pub fn verify_inverse_pair<S: Scalar>(m: &ConnMatrix<S>, inv: &ConnMatrix<S>) -> Report {
    let mut rep = Report::new(format!("inverse tau={} n={}", m.tau, m.n));
    let tk = m.tau_kappa();
    if inv.tau != m.tau.inverse() || inv.kappa != tk || inv.order != m.order {
        rep.fail("matrices are not an inverse pair");
        return rep;
    }
    for (i, nu) in m.order.iter().enumerate() {
        for (j, mu) in m.order.iter().enumerate() {
            let l = inv.entries[i][j].clone() * norm_a(mu, &tk);
            let r = m.entries[j][i].clone() * norm_a(nu, &m.kappa);
            rep.check(l == r, || format!("nu={nu:?} mu={mu:?}: {l} != {r}"));
        }
    }
    rep
}

/// Inverse relation with both matrices from the Gram route.
pub fn verify_inverse<S: Scalar>(kappa: &KappaParams<S>, tau: &Permutation, n: usize) -> Result<Report> {
    let m = gram_connection(tau, kappa, n)?;
    let inv = gram_connection(&tau.inverse(), &kappa.permuted(tau), n)?;
    Ok(verify_inverse_pair(&m, &inv))
}

/// Given `c1 = c^{t1}(kappa)`, `c2 = c^{t2}(t1 kappa)` and
/// `c12 = c^{t1 t2}(kappa)`, checks `c12 = c2 c1` exactly and the normalized
/// product in (sign, square) form.
pub fn verify_convolution_matrices<S: Scalar>(c1: &ConnMatrix<S>, c2: &ConnMatrix<S>, c12: &ConnMatrix<S>) -> Result<Report> {
    let mut rep = Report::new(format!("convolution {}*{} n={}", c1.tau, c2.tau, c1.n));
    if c2.kappa != c1.tau_kappa() || c12.tau != c1.tau.compose(&c2.tau) || c12.kappa != c1.kappa {
        rep.fail("matrices do not form a convolution triple");
        return Ok(rep);
    }
    let (n1, n2, n12) = (c1.normalized_entries(), c2.normalized_entries(), c12.normalized_entries());
    let k = c1.size();
    for i in 0..k {
        for j in 0..k {
            let mut s = S::zero();
            let mut terms = Vec::with_capacity(k);
            for w in 0..k {
                s = s + c2.entries[i][w].clone() * c1.entries[w][j].clone();
                let t = n2[i][w].mul(&n1[w][j]);
                terms.push((S::from_i64(t.sign() as i64), t.square()));
            }
            let (nu, mu) = (&c1.order[i], &c1.order[j]);
            rep.check(s == c12.entries[i][j], || format!("nu={nu:?} mu={mu:?}: {s} != {}", c12.entries[i][j]));
            let hat = sum_sqrt_terms(&terms)?;
            rep.check(hat == n12[i][j], || format!("normalized nu={nu:?} mu={mu:?}: {hat} != {}", n12[i][j]));
        }
    }
    Ok(rep)
}

/// Convolution identity with all three matrices from the Gram route.
pub fn verify_convolution<S: Scalar>(
    kappa: &KappaParams<S>,
    t1: &Permutation,
    t2: &Permutation,
    n: usize,
) -> Result<Report> {
    let c1 = gram_connection(t1, kappa, n)?;
    let c2 = gram_connection(t2, &kappa.permuted(t1), n)?;
    let c12 = gram_connection(&t1.compose(t2), kappa, n)?;
    verify_convolution_matrices(&c1, &c2, &c12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn kappa(v: &[(i64, i64)]) -> KappaParams<Rational> {
        KappaParams::new(v.iter().map(|&(a, b)| q(a, b)).collect()).unwrap()
    }

    #[test]
    fn transposition_example() {
        let k = kappa(&[(0, 1), (0, 1), (0, 1)]);
        let m = gram_connection(&Permutation::parse("(12)", 3).unwrap(), &k, 1).unwrap();
        assert_eq!(m.entries, vec![vec![q(-1, 2), q(3, 2)], vec![q(1, 2), q(1, 2)]]);
        assert!(verify_reconstruction(&m).unwrap().passed());
        assert!(verify_orthogonality(&m).passed());
    }

    #[test]
    fn identity_and_sign_matrices() {
        let k = kappa(&[(1, 2), (1, 3), (1, 4)]);
        let id = gram_connection(&Permutation::identity(3), &k, 3).unwrap().normalize();
        for (i, row) in id.normalized.as_ref().unwrap().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { QSqrt::one() } else { QSqrt::zero() });
            }
        }
        let m = gram_connection(&Permutation::parse("(23)", 3).unwrap(), &k, 3).unwrap();
        for (i, nu) in m.order.iter().enumerate() {
            for j in 0..m.size() {
                let e = if i == j { crate::exact_arith::neg_one_pow(nu[1]) } else { q(0, 1) };
                assert_eq!(m.entries[i][j], e);
            }
        }
    }

    #[test]
    fn row_norms_of_normalized_matrix() {
        let k = kappa(&[(1, 2), (-1, 3), (2, 1)]);
        let m = gram_connection(&Permutation::parse("(123)", 3).unwrap(), &k, 3).unwrap().normalize();
        for row in m.normalized.as_ref().unwrap() {
            let s: Rational = row.iter().map(|v| v.square()).sum();
            assert_eq!(s, q(1, 1));
        }
    }

    #[test]
    fn inverse_and_convolution() {
        let k = kappa(&[(1, 2), (1, 3), (1, 4), (1, 5)]);
        let c = Permutation::parse("(123)", 4).unwrap();
        assert!(verify_inverse(&k, &c, 2).unwrap().passed());
        let t12 = Permutation::parse("(12)", 4).unwrap();
        let t23 = Permutation::parse("(23)", 4).unwrap();
        assert_eq!(t12.compose(&t23), c);
        assert!(verify_convolution(&k, &t12, &t23, 2).unwrap().passed());
    }
}
