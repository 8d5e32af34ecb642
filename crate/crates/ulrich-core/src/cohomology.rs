//! Exact cohomology dimensions h^i(X, O_X(k)) for a smooth degree-d surface
//! X in P^3, derived from the restriction sequence
//! 0 -> O(k-d) -> O(k) -> O_X(k) -> 0 and the vanishing of the middle
//! cohomology of projective space. Everything is closed-form binomial
//! counting in exact integer arithmetic; no complexes are materialized.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, Zero};
use serde::Serialize;

use crate::binomial::binomial;
use crate::error::Error;

/// dim H^i(P^3, O(k)), exact.
///
/// Nonzero only for i = 0 (k >= 0) and i = 3 (k <= -4); the two middle
/// degrees vanish identically on projective space.
pub fn ambient_h(i: u8, k: i64) -> Result<BigUint, Error> {
    match i {
        0 => Ok(ambient_h0(k)),
        1 | 2 => Ok(BigUint::zero()),
        3 => Ok(ambient_h3(k)),
        _ => Err(Error::CohomologyDegreeOutOfRange { index: i, max: 3 }),
    }
}

fn ambient_h0(k: i64) -> BigUint {
    if k >= 0 {
        binomial(k + 3, 3)
    } else {
        BigUint::zero()
    }
}

fn ambient_h3(k: i64) -> BigUint {
    if k <= -4 {
        binomial(-k - 1, 3)
    } else {
        BigUint::zero()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f.saturating_mul(f) <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// A smooth hypersurface surface of degree d in P^3 over an algebraically
/// closed field of characteristic p, together with a polarization scale s:
/// the working very-ample class O(1) is O_old(s), where "old" twists are the
/// restriction of the ambient O_{P^3}(1). The default scale 1 is the plain
/// hypersurface embedding; scale r(d-4) models the r-canonical embedding.
///
/// Smoothness is assumed, not certified; the dimension formulas depend only
/// on the degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HypersurfaceModel {
    degree: i64,
    characteristic: u64,
    polarization_scale: i64,
}

impl HypersurfaceModel {
    /// Model with the plain degree-d embedding (scale 1).
    pub fn new(degree: i64, characteristic: u64) -> Result<Self, Error> {
        Self::with_polarization(degree, characteristic, 1)
    }

    pub fn with_polarization(
        degree: i64,
        characteristic: u64,
        polarization_scale: i64,
    ) -> Result<Self, Error> {
        if degree < 1 {
            return Err(Error::InvalidDegree(degree));
        }
        if !is_prime(characteristic) {
            return Err(Error::NonPrimeCharacteristic(characteristic));
        }
        if polarization_scale < 1 {
            return Err(Error::InvalidPolarizationScale(polarization_scale));
        }
        Ok(Self { degree, characteristic, polarization_scale })
    }

    /// Same surface, re-read through O_new(1) = O_old(s). The scale is
    /// absolute: it always refers back to the ambient restriction, so
    /// repolarizing twice does not compound.
    pub fn repolarize(&self, scale: i64) -> Result<Self, Error> {
        Self::with_polarization(self.degree, self.characteristic, scale)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn polarization_scale(&self) -> i64 {
        self.polarization_scale
    }

    /// Twist of the canonical bundle in old units: omega_X = O_X(d - 4).
    pub fn canonical_twist(&self) -> i64 {
        self.degree - 4
    }

    /// Old-unit twist of O_new(m).
    pub fn old_twist(&self, new_twist: i64) -> i64 {
        new_twist * self.polarization_scale
    }

    /// New-unit twist of O_old(k), when it exists. Twists that are not an
    /// integral multiple of the scale are reported as unrepresentable rather
    /// than rounded.
    pub fn new_twist(&self, old_twist: i64) -> Result<i64, Error> {
        if old_twist % self.polarization_scale == 0 {
            Ok(old_twist / self.polarization_scale)
        } else {
            Err(Error::UnrepresentableTwist {
                old_twist,
                scale: self.polarization_scale,
            })
        }
    }

    /// dim H^i(X, O_X(k)) with k in old units.
    ///
    /// From the restriction sequence: h^0(k) = h^0_{P^3}(k) - h^0_{P^3}(k-d),
    /// h^1 vanishes for every k (the hypersurface is arithmetically
    /// Cohen-Macaulay), and h^2(k) = h^3_{P^3}(k-d) - h^3_{P^3}(k).
    pub fn h(&self, i: u8, k: i64) -> Result<BigUint, Error> {
        match i {
            0 => Ok(self.h0(k)),
            1 => Ok(BigUint::zero()),
            2 => Ok(self.h2(k)),
            _ => Err(Error::CohomologyDegreeOutOfRange { index: i, max: 2 }),
        }
    }

    pub(crate) fn h0(&self, k: i64) -> BigUint {
        ambient_h0(k)
            .checked_sub(&ambient_h0(k - self.degree))
            .expect("ambient h^0 is monotone in the twist")
    }

    pub(crate) fn h2(&self, k: i64) -> BigUint {
        ambient_h3(k - self.degree)
            .checked_sub(&ambient_h3(k))
            .expect("ambient h^3 is antitone in the twist")
    }

    /// The twist dual to k under Serre duality: h^2(O_X(k)) = h^0(O_X(d-4-k)).
    pub fn serre_dual_twist(&self, k: i64) -> i64 {
        self.degree - 4 - k
    }

    /// chi(O_X(k)) by the closed form chi(O_X) + d*k*(k - d + 4)/2 with
    /// chi(O_X) = 1 + C(d-1, 3). Exact, valid for every integer k.
    pub fn euler_char(&self, k: i64) -> BigInt {
        let d = BigInt::from(self.degree);
        let chi_structure = BigInt::from(1) + BigInt::from(binomial(self.degree - 1, 3));
        let quadratic = d * BigInt::from(k) * BigInt::from(k - self.degree + 4);
        // d*k*(k-d+4) is always even: for odd d, k and k-d+4 differ in parity.
        chi_structure + quadratic / BigInt::from(2)
    }

    /// View a line bundle as a cohomology oracle twisted in polarization steps.
    pub fn line_bundle(&self, old_twist: i64) -> TwistedLineBundle {
        TwistedLineBundle { model: *self, twist: old_twist }
    }
}

/// An element of the rank-1 Picard model: the class of O_X(j), j in old units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LineBundleClass {
    pub twist: i64,
}

impl LineBundleClass {
    pub fn new(twist: i64) -> Self {
        Self { twist }
    }

    pub fn is_ample(&self) -> bool {
        self.twist > 0
    }

    pub fn is_trivial(&self) -> bool {
        self.twist == 0
    }

    pub fn is_anti_ample(&self) -> bool {
        self.twist < 0
    }
}

/// Anything whose cohomology reduces exactly to line-bundle cohomology on the
/// model, with twisting by O_new(m) acting affinely on the reduced twist.
/// Implemented by twisted Frobenius pushforwards and by line bundles
/// themselves; the classifier is generic over this surface.
pub trait CohomologyOracle {
    fn model(&self) -> &HypersurfaceModel;

    /// Old-unit twist k with h^i(self tensor O_new(m)) = h^i(X, O_X(k)).
    /// Must be affine in m with a strictly positive step.
    fn reduced_twist(&self, m: i64) -> i64;

    /// The step of the affine twist map; equals the polarization scale for a
    /// line bundle and p*s for a Frobenius pushforward.
    fn twist_step(&self) -> i64 {
        self.reduced_twist(1) - self.reduced_twist(0)
    }

    /// dim H^i(self tensor O_new(m)).
    fn h(&self, i: u8, m: i64) -> Result<BigUint, Error> {
        self.model().h(i, self.reduced_twist(m))
    }
}

/// A line bundle O_X(j) read as an oracle: twisting by O_new(m) lands on
/// old twist j + s*m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistedLineBundle {
    model: HypersurfaceModel,
    twist: i64,
}

impl TwistedLineBundle {
    pub fn old_twist(&self) -> i64 {
        self.twist
    }
}

impl CohomologyOracle for TwistedLineBundle {
    fn model(&self) -> &HypersurfaceModel {
        &self.model
    }

    fn reduced_twist(&self, m: i64) -> i64 {
        let s = self.model.polarization_scale() as i128;
        let k = self.twist as i128 + s * m as i128;
        i64::try_from(k).expect("reduced twist fits in i64")
    }
}

/// A window of exact dimensions, with the Euler-characteristic cross-check
/// baked into construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    window: (i64, i64),
    entries: BTreeMap<(u8, i64), BigUint>,
}

impl CohomologyTable {
    /// Tabulate h^i(O_X(k)) for i = 0..2 and k in lo..=hi, verifying on every
    /// column that h^0 - h^1 + h^2 equals the closed-form Euler characteristic.
    pub fn build(model: &HypersurfaceModel, lo: i64, hi: i64) -> Result<Self, Error> {
        assert!(lo <= hi, "window must be nonempty");
        let mut entries = BTreeMap::new();
        for k in lo..=hi {
            let mut alternating = BigInt::zero();
            for i in 0..=2u8 {
                let dim = model.h(i, k)?;
                let signed = BigInt::from(dim.clone());
                if i == 1 {
                    alternating -= signed;
                } else {
                    alternating += signed;
                }
                entries.insert((i, k), dim);
            }
            assert_eq!(
                alternating,
                model.euler_char(k),
                "Euler characteristic cross-check failed at k={k}"
            );
        }
        Ok(Self { window: (lo, hi), entries })
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn get(&self, i: u8, k: i64) -> Option<&BigUint> {
        self.entries.get(&(i, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn ambient_examples() {
        // Only the constants in degree zero.
        assert_eq!(ambient_h(0, 0).unwrap(), big(1));
        // Ten quadratic monomials in four variables.
        assert_eq!(ambient_h(0, 2).unwrap(), big(10));
        // The dual of (0, 0) under k -> -k - 4.
        assert_eq!(ambient_h(3, -4).unwrap(), big(1));
        assert_eq!(ambient_h(1, 17).unwrap(), big(0));
        assert_eq!(ambient_h(2, -9).unwrap(), big(0));
        assert_eq!(ambient_h(0, -1).unwrap(), big(0));
        assert_eq!(ambient_h(3, -3).unwrap(), big(0));
    }

    #[test]
    fn ambient_rejects_bad_degree() {
        assert_eq!(
            ambient_h(4, 0),
            Err(Error::CohomologyDegreeOutOfRange { index: 4, max: 3 })
        );
    }

    #[test]
    fn surface_dimensions_on_the_quintic() {
        let x = HypersurfaceModel::new(5, 5).unwrap();
        // Four linear monomials survive restriction.
        assert_eq!(x.h(0, 1).unwrap(), big(4));
        // The model class is arithmetically Cohen-Macaulay.
        assert_eq!(x.h(1, 7).unwrap(), big(0));
        // h^2(O_X) = ambient_h(3,-5) - ambient_h(3,0) = 4.
        assert_eq!(x.h(2, 0).unwrap(), big(4));
        assert_eq!(
            x.h(3, 0),
            Err(Error::CohomologyDegreeOutOfRange { index: 3, max: 2 })
        );
    }

    #[test]
    fn serre_dual_twists() {
        let q = HypersurfaceModel::new(5, 5).unwrap();
        assert_eq!(q.serre_dual_twist(0), 1);
        assert_eq!(q.serre_dual_twist(1), 0);
        let oct = HypersurfaceModel::new(8, 3).unwrap();
        assert_eq!(oct.serre_dual_twist(-3), 7);
    }

    #[test]
    fn euler_characteristics() {
        let quintic = HypersurfaceModel::new(5, 5).unwrap();
        assert_eq!(quintic.euler_char(0), BigInt::from(5));
        let quartic = HypersurfaceModel::new(4, 3).unwrap();
        assert_eq!(quartic.euler_char(0), BigInt::from(2));
        let plane = HypersurfaceModel::new(1, 2).unwrap();
        assert_eq!(plane.euler_char(0), BigInt::from(1));
    }

    #[test]
    fn model_validation() {
        assert_eq!(HypersurfaceModel::new(0, 5), Err(Error::InvalidDegree(0)));
        assert_eq!(
            HypersurfaceModel::new(5, 4),
            Err(Error::NonPrimeCharacteristic(4))
        );
        assert_eq!(
            HypersurfaceModel::new(5, 1),
            Err(Error::NonPrimeCharacteristic(1))
        );
        assert_eq!(
            HypersurfaceModel::with_polarization(5, 5, 0),
            Err(Error::InvalidPolarizationScale(0))
        );
        assert!(HypersurfaceModel::new(5, 2).is_ok());
    }

    #[test]
    fn repolarization() {
        let x = HypersurfaceModel::new(5, 5).unwrap();
        assert_eq!(x.repolarize(1).unwrap(), x);
        let y = x.repolarize(2).unwrap();
        // New twist 1 reads as old twist 2: ten quadrics.
        assert_eq!(y.h(0, y.old_twist(1)).unwrap(), big(10));
        assert!(x.repolarize(0).is_err());
        assert!(x.repolarize(-3).is_err());
    }

    #[test]
    fn representability_of_the_canonical_class() {
        // Under scale 3 on the quintic the canonical class O_old(1) has no
        // integral new twist.
        let y = HypersurfaceModel::with_polarization(5, 5, 3).unwrap();
        assert_eq!(
            y.new_twist(y.canonical_twist()),
            Err(Error::UnrepresentableTwist { old_twist: 1, scale: 3 })
        );
        assert_eq!(y.new_twist(6).unwrap(), 2);
    }

    #[test]
    fn line_bundle_class_positivity() {
        assert!(LineBundleClass::new(1).is_ample());
        assert!(LineBundleClass::new(0).is_trivial());
        assert!(LineBundleClass::new(-2).is_anti_ample());
    }

    #[test]
    fn line_bundle_oracle_steps_by_the_scale() {
        let y = HypersurfaceModel::with_polarization(5, 5, 3).unwrap();
        let l = y.line_bundle(2);
        assert_eq!(l.twist_step(), 3);
        assert_eq!(l.reduced_twist(0), 2);
        assert_eq!(l.reduced_twist(-2), -4);
        assert_eq!(l.h(0, 0).unwrap(), big(10));
    }

    #[test]
    fn table_window_and_lookup() {
        let x = HypersurfaceModel::new(5, 5).unwrap();
        let t = CohomologyTable::build(&x, -3, 3).unwrap();
        assert_eq!(t.window(), (-3, 3));
        assert_eq!(t.get(0, 1), Some(&big(4)));
        assert_eq!(t.get(1, 0), Some(&big(0)));
        assert_eq!(t.get(2, 0), Some(&big(4)));
        assert_eq!(t.get(0, 4), None);
    }
}
