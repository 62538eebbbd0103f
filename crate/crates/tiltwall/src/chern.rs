//! H-multiplied Chern characters and their exact arithmetic.
//!
//! A class is stored as the tuple (H^n·ch_0, ..., ch_n) of exact rationals,
//! tagged with the ambient space. On P3 the lattice is Z + Z + (1/2)Z for
//! ch_{<=2}, extended by (1/6)Z for ch_3; on a degree-d surface in
//! Picard-rank-one mode the first two components are multiples of d.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{format_rat, Scalar};

/// Ambient space of a class: P3 or a degree-d hypersurface in P3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    P3,
    Surface { d: i64 },
}

impl Space {
    pub fn dim(&self) -> usize {
        match self {
            Space::P3 => 3,
            Space::Surface { .. } => 2,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            Space::P3 => 1,
            Space::Surface { d } => *d,
        }
    }

    /// Parse the space tag "p3" or "surface:d=<int>".
    pub fn parse(tag: &str) -> Result<Space> {
        let tag = tag.trim();
        if tag.eq_ignore_ascii_case("p3") {
            return Ok(Space::P3);
        }
        if let Some(rest) = tag.strip_prefix("surface:d=") {
            let d: i64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad surface degree {rest:?}")))?;
            if d < 1 {
                return Err(Error::Parse(format!("surface degree must be positive, got {d}")));
            }
            return Ok(Space::Surface { d });
        }
        Err(Error::Parse(format!("unknown space tag {tag:?}")))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::P3 => write!(f, "p3"),
            Space::Surface { d } => write!(f, "surface:d={d}"),
        }
    }
}

/// H-multiplied Chern character: comps\[i\] = H^{n-i}·ch_i.
///
/// Surface classes may carry only three components; a P3 class carries
/// either the full four or a truncation to ch_{<=2} (wall arithmetic never
/// looks at ch_3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HChern<R: Scalar> {
    pub space: Space,
    pub comps: Vec<R>,
}

/// Slope value: a rational, or +infinity for torsion classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slope<R: Scalar> {
    Finite(R),
    Infinite,
}

impl<R: Scalar> PartialOrd for Slope<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: Scalar> Ord for Slope<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::Infinite, Slope::Infinite) => Ordering::Equal,
            (Slope::Infinite, _) => Ordering::Greater,
            (_, Slope::Infinite) => Ordering::Less,
            (Slope::Finite(a), Slope::Finite(b)) => a.cmp(b),
        }
    }
}

/// Integrality checking mode, see [`HChern::lattice_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LatticeMode {
    /// Waive the (1/6)Z constraint on ch_3 (twisted characters legitimately
    /// leave the lattice).
    pub permissive: bool,
    /// Surface classes: drop the "components divide d" constraint, keeping
    /// only "denominators divide 2".
    pub general_picard: bool,
}

impl<R: Scalar> HChern<R> {
    pub fn new(space: Space, comps: Vec<R>) -> Result<Self> {
        let n = space.dim();
        if comps.len() != n + 1 && !(space == Space::P3 && comps.len() == 3) {
            return Err(Error::Parse(format!(
                "expected {} components for {space}, got {}",
                n + 1,
                comps.len()
            )));
        }
        Ok(HChern { space, comps })
    }

    pub fn p3(comps: Vec<R>) -> Self {
        HChern { space: Space::P3, comps }
    }

    pub fn surface(d: i64, comps: Vec<R>) -> Self {
        HChern { space: Space::Surface { d }, comps }
    }

    /// Parse the text form "e0,e1,e2[,e3]".
    pub fn parse(space: Space, text: &str) -> Result<Self> {
        let comps: Option<Vec<R>> = text.split(',').map(|c| R::parse(c)).collect();
        let comps = comps.ok_or_else(|| Error::Parse(format!("bad component list {text:?}")))?;
        HChern::new(space, comps)
    }

    pub fn emit(&self) -> String {
        self.comps.iter().map(format_rat).collect::<Vec<_>>().join(",")
    }

    pub fn e(&self, i: usize) -> &R {
        &self.comps[i]
    }

    /// ch_3 in H-coordinates; errors if the class is truncated.
    pub fn e3(&self) -> Result<&R> {
        self.comps.get(3).ok_or(Error::MissingCh3)
    }

    pub fn has_ch3(&self) -> bool {
        self.comps.len() > 3
    }

    /// Drop ch_3, keeping the wall-relevant truncation.
    pub fn truncate(&self) -> Self {
        HChern { space: self.space, comps: self.comps[..3].to_vec() }
    }

    /// True iff the class satisfies the integrality constraints of its space.
    pub fn lattice_check(&self, mode: LatticeMode) -> bool {
        let two = R::from_int(2);
        match self.space {
            Space::P3 => {
                let mut ok = self.e(0).is_integer()
                    && self.e(1).is_integer()
                    && (two * self.e(2).clone()).is_integer();
                if !mode.permissive {
                    if let Some(e3) = self.comps.get(3) {
                        ok = ok && (R::from_int(6) * e3.clone()).is_integer();
                    }
                }
                ok
            }
            Space::Surface { d } => {
                let half_ok = (two * self.e(2).clone()).is_integer();
                if mode.general_picard {
                    return self.e(0).is_integer() && self.e(1).is_integer() && half_ok;
                }
                let d = R::from_int(d);
                (self.e(0).clone() / d.clone()).is_integer()
                    && (self.e(1).clone() / d).is_integer()
                    && half_ok
            }
        }
    }

    /// The twisted character ch^beta = e^{-beta H}·ch, in H-coordinates.
    pub fn twist(&self, beta: &R) -> Self {
        let half = R::from_frac(1, 2);
        let sixth = R::from_frac(1, 6);
        let (e0, e1, e2) = (self.e(0).clone(), self.e(1).clone(), self.e(2).clone());
        let mut comps = vec![
            e0.clone(),
            e1.clone() - beta.clone() * e0.clone(),
            e2.clone() - beta.clone() * e1.clone() + half * beta.clone() * beta.clone() * e0.clone(),
        ];
        if let Some(e3) = self.comps.get(3) {
            let b2 = beta.clone() * beta.clone();
            comps.push(
                e3.clone() - beta.clone() * e2
                    + R::from_frac(1, 2) * b2.clone() * e1
                    - sixth * b2 * beta.clone() * e0,
            );
        }
        HChern { space: self.space, comps }
    }

    /// ch(E(kH)), i.e. twist by -k.
    pub fn tensor_line_bundle(&self, k: i64) -> Self {
        self.twist(&R::from_int(-k))
    }

    /// Numerical action of the shifted derived dual on P3:
    /// (e0, e1, e2, e3) -> (-e0, e1, -e2, e3).
    pub fn shifted_dual(&self) -> Result<Self> {
        if self.space != Space::P3 {
            return Err(Error::RequiresP3(self.space.to_string()));
        }
        let mut comps = self.comps.clone();
        for (i, c) in comps.iter_mut().enumerate() {
            if i % 2 == 0 {
                *c = -c.clone();
            }
        }
        Ok(HChern { space: self.space, comps })
    }

    /// Discriminant e1^2 - 2 e0 e2 (twist-invariant).
    pub fn delta(&self) -> R {
        self.e(1).clone() * self.e(1).clone()
            - R::from_int(2) * self.e(0).clone() * self.e(2).clone()
    }

    /// Classical slope e1/e0, with +infinity for torsion classes.
    pub fn slope_mu(&self) -> Slope<R> {
        if self.e(0).is_zero() {
            Slope::Infinite
        } else {
            Slope::Finite(self.e(1).clone() / self.e(0).clone())
        }
    }

    /// Euler characteristic on P3 via Hirzebruch-Riemann-Roch with
    /// td = (1, 2, 11/6, 1).
    pub fn euler_char_p3(&self) -> Result<R> {
        if self.space != Space::P3 {
            return Err(Error::RequiresP3(self.space.to_string()));
        }
        let e3 = self.e3()?.clone();
        Ok(e3
            + R::from_int(2) * self.e(2).clone()
            + R::from_frac(11, 6) * self.e(1).clone()
            + self.e(0).clone())
    }

    /// Hilbert polynomial m -> chi(E(m)) on P3, expanded symbolically in m.
    pub fn hilbert_poly(&self) -> Result<HilbertPolynomial<R>> {
        if self.space != Space::P3 {
            return Err(Error::RequiresP3(self.space.to_string()));
        }
        let e3 = self.e3()?.clone();
        let (e0, e1, e2) = (self.e(0).clone(), self.e(1).clone(), self.e(2).clone());
        // chi(E(m)) with ch^{-m}: collect powers of m against td coefficients.
        let a0 = e3 + R::from_int(2) * e2.clone() + R::from_frac(11, 6) * e1.clone() + e0.clone();
        let a1 = e2 + R::from_int(2) * e1.clone() + R::from_frac(11, 6) * e0.clone();
        let a2 = R::from_frac(1, 2) * e1 + e0.clone();
        let a3 = R::from_frac(1, 6) * e0;
        Ok(HilbertPolynomial { coeffs: vec![a0, a1, a2, a3] })
    }
}

/// Polynomial in m with exact rational coefficients, coeffs\[i\] on m^i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial<R: Scalar> {
    pub coeffs: Vec<R>,
}

impl<R: Scalar> HilbertPolynomial<R> {
    pub fn eval(&self, m: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * m.clone() + c.clone();
        }
        acc
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }
}

/// The reduced-Hilbert-polynomial preorder: lower degree is larger, equal
/// degrees compare leading-coefficient-normalized polynomials for m >> 0.
///
/// `Greater` means p > q in that order.
pub fn poly_compare<R: Scalar>(
    p: &HilbertPolynomial<R>,
    q: &HilbertPolynomial<R>,
) -> Result<Ordering> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    if dp != dq {
        // deg(p) < deg(q) means p > q
        return Ok(dq.cmp(&dp));
    }
    let lp = p.coeffs[dp].clone();
    let lq = q.coeffs[dq].clone();
    for i in (0..dp).rev() {
        let a = p.coeffs.get(i).cloned().unwrap_or_else(R::zero) / lp.clone();
        let b = q.coeffs.get(i).cloned().unwrap_or_else(R::zero) / lq.clone();
        if a != b {
            return Ok(a.cmp(&b));
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(s: &str) -> Rat {
        <Rat as Scalar>::parse(s).unwrap()
    }

    fn p3(text: &str) -> HChern<Rat> {
        HChern::parse(Space::P3, text).unwrap()
    }

    #[test]
    fn lattice_check_examples() {
        let strict = LatticeMode::default();
        assert!(p3("0,10,-25,125/3").lattice_check(strict));
        assert!(!p3("1,0,1/3,0").lattice_check(strict));
        assert!(p3("2,-1,-1/2,5/6").lattice_check(strict));
        // permissive waives only the ch3 denominator
        assert!(!p3("1,0,0,1/5").lattice_check(strict));
        assert!(p3("1,0,0,1/5").lattice_check(LatticeMode { permissive: true, ..strict }));
        // surface, Picard rank one
        let v = HChern::<Rat>::parse(Space::Surface { d: 5 }, "10,-5,-3/2").unwrap();
        assert!(v.lattice_check(strict));
        let w = HChern::<Rat>::parse(Space::Surface { d: 5 }, "2,-1,-3/2").unwrap();
        assert!(!w.lattice_check(strict));
        assert!(w.lattice_check(LatticeMode { general_picard: true, ..strict }));
    }

    #[test]
    fn twist_examples() {
        let minus_one = rat("-1");
        assert_eq!(p3("2,0,-1,0").twist(&minus_one), p3("2,2,0,-2/3"));
        let v = p3("0,10,-25,125/3");
        assert_eq!(v.twist(&rat("0")), v);
        assert_eq!(v.twist(&minus_one), p3("0,10,-15,65/3"));
    }

    /// Independent oracle: expand e^{-beta H}·ch term by term with factorials.
    fn twist_oracle(v: &HChern<Rat>, beta: &Rat) -> HChern<Rat> {
        let fact = [rat("1"), rat("1"), rat("2"), rat("6")];
        let mut comps = Vec::new();
        for k in 0..v.comps.len() {
            let mut acc = rat("0");
            for j in 0..=k {
                let mut pow = rat("1");
                for _ in 0..(k - j) {
                    pow *= -beta.clone();
                }
                acc += v.comps[j].clone() * pow / fact[k - j].clone();
            }
            comps.push(acc);
        }
        HChern { space: v.space, comps }
    }

    #[test]
    fn twist_matches_series_oracle() {
        let v = p3("3,-2,7/2,-5/6");
        for b in ["-1", "2", "3/4", "-7/3"] {
            let beta = rat(b);
            assert_eq!(v.twist(&beta), twist_oracle(&v, &beta));
        }
    }

    #[test]
    fn tensor_line_bundle_examples() {
        // ch(G(d)) = (-2, 0, 1, d + e - z) at d = 5, e = z = 0
        let g = p3("-2,10,-24,125/3");
        assert_eq!(g.tensor_line_bundle(5), p3("-2,0,1,5"));
        let v = p3("1,2,3/2,1/6");
        assert_eq!(v.tensor_line_bundle(0), v);
        assert_eq!(p3("1,0,0,0").tensor_line_bundle(-4), p3("1,-4,8,-32/3"));
    }

    #[test]
    fn shifted_dual_examples() {
        let v = p3("-2,0,1,1/3");
        assert_eq!(v.shifted_dual().unwrap(), p3("2,0,-1,1/3"));
        assert_eq!(v.shifted_dual().unwrap().shifted_dual().unwrap(), v);
        assert_eq!(p3("0,10,-25,0").shifted_dual().unwrap(), p3("0,10,25,0"));
        let s = HChern::<Rat>::surface(5, vec![rat("1"), rat("0"), rat("0")]);
        assert!(s.shifted_dual().is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(p3("2,-1,-3/2").delta(), rat("7"));
        assert_eq!(p3("1,0,0,0").delta(), rat("0"));
        let v = HChern::<Rat>::surface(5, vec![rat("10"), rat("-5"), rat("-3/2")]);
        assert_eq!(v.delta(), rat("55"));
    }

    #[test]
    fn slope_examples() {
        assert_eq!(p3("2,-1,0,0").slope_mu(), Slope::Finite(rat("-1/2")));
        assert_eq!(p3("0,10,-25,0").slope_mu(), Slope::Infinite);
        assert_eq!(p3("1,-4,8,-32/3").slope_mu(), Slope::Finite(rat("-4")));
        assert!(Slope::<Rat>::Infinite > Slope::Finite(rat("1000000")));
    }

    #[test]
    fn euler_char_examples() {
        assert_eq!(p3("2,0,-2,2").euler_char_p3().unwrap(), rat("0"));
        assert_eq!(p3("1,0,0,0").euler_char_p3().unwrap(), rat("1"));
        assert_eq!(p3("2,-1,-1/2,5/6").euler_char_p3().unwrap(), rat("0"));
    }

    #[test]
    fn hilbert_poly_examples() {
        let o = p3("1,0,0,0").hilbert_poly().unwrap();
        assert_eq!(o.coeffs, vec![rat("1"), rat("11/6"), rat("1"), rat("1/6")]);
        let sky = p3("0,0,0,1").hilbert_poly().unwrap();
        assert_eq!(sky.coeffs, vec![rat("1"), rat("0"), rat("0"), rat("0")]);
        // m = 0 consistency
        let v = p3("0,10,-25,125/3");
        assert_eq!(v.hilbert_poly().unwrap().eval(&rat("0")), v.euler_char_p3().unwrap());
    }

    #[test]
    fn poly_compare_examples() {
        let m2 = HilbertPolynomial { coeffs: vec![rat("0"), rat("0"), rat("1")] };
        let m3 = HilbertPolynomial { coeffs: vec![rat("0"), rat("0"), rat("0"), rat("1")] };
        let m2_twice = HilbertPolynomial { coeffs: vec![rat("0"), rat("0"), rat("2")] };
        let m2_plus_m = HilbertPolynomial { coeffs: vec![rat("0"), rat("1"), rat("1")] };
        assert_eq!(poly_compare(&m2, &m3).unwrap(), Ordering::Greater);
        assert_eq!(poly_compare(&m2_twice, &m2).unwrap(), Ordering::Equal);
        assert_eq!(poly_compare(&m2_plus_m, &m2).unwrap(), Ordering::Greater);
        let zero = HilbertPolynomial::<Rat> { coeffs: vec![rat("0")] };
        assert_eq!(poly_compare(&zero, &m2), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn parse_rejects_bad_shapes() {
        assert!(HChern::<Rat>::parse(Space::P3, "1,2").is_err());
        assert!(HChern::<Rat>::parse(Space::Surface { d: 2 }, "1,2,3,4").is_err());
        assert!(HChern::<Rat>::parse(Space::P3, "1,x,3").is_err());
        assert!(Space::parse("surface:d=0").is_err());
        assert!(Space::parse("p4").is_err());
    }
}
