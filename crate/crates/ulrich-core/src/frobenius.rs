//! Symbolic twisted Frobenius pushforwards E = F_*(O_X(j))(a) and the exact
//! reduction of their cohomology to line-bundle cohomology.
//!
//! E is never materialized as a sheaf: the absolute Frobenius is finite flat,
//! so H^i(F_*(V)) = H^i(V), and together with the projection formula and
//! F^*(M) = M^{tensor p} every twist of E collapses to a single line-bundle
//! query. The inner twist j lives in old units, the outer twist a in
//! polarization units.

use num_bigint::BigUint;
use serde::Serialize;

use crate::cohomology::{CohomologyOracle, HypersurfaceModel};
use crate::error::Error;

/// E = F_*(O_X(j))(a) on the model's surface; rank p^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusPushforward {
    model: HypersurfaceModel,
    inner_twist: i64,
    outer_twist: i64,
}

/// One h^i query, on E (twist in polarization units) or on its reduced line
/// bundle (twist in old units).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohomologyQuery {
    pub i: u8,
    pub twist: i64,
}

/// The rewrite steps that take a query on E(m) to a line-bundle query, in
/// the order they are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteStep {
    /// F_*(L)(t) = F_*(L tensor F^*(O(t))).
    ProjectionFormula,
    /// F^*(O_new(t)) = O_new(p t) = O_old(p s t).
    FrobeniusPullbackPower,
    /// H^i(F_*(V)) = H^i(V) for the finite flat Frobenius.
    PushforwardCohomologyIdentity,
}

impl std::fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            RewriteStep::ProjectionFormula => "projection formula",
            RewriteStep::FrobeniusPullbackPower => "Frobenius pullback is the p-th power",
            RewriteStep::PushforwardCohomologyIdentity => {
                "cohomology commutes with the finite flat pushforward"
            }
        };
        f.write_str(text)
    }
}

/// Certificate that h^i(E(m)) equals h^i(O_X(k)) with k = j + p*s*(a+m).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub source: CohomologyQuery,
    pub target: CohomologyQuery,
    pub rule_trace: [RewriteStep; 3],
}

impl FrobeniusPushforward {
    /// F_*(O_X(inner_twist))(outer_twist); inner in old units, outer in
    /// polarization units.
    pub fn new(model: HypersurfaceModel, inner_twist: i64, outer_twist: i64) -> Self {
        Self { model, inner_twist, outer_twist }
    }

    pub fn inner_twist(&self) -> i64 {
        self.inner_twist
    }

    pub fn outer_twist(&self) -> i64 {
        self.outer_twist
    }

    /// The absolute Frobenius of a surface is finite flat of degree p^2,
    /// independent of the twists.
    pub fn rank(&self) -> u128 {
        let p = self.model.characteristic() as u128;
        p * p
    }

    /// Reduce the query h^i(E(m)) to a line-bundle query, recording the
    /// rewrite trace.
    pub fn reduce(&self, i: u8, m: i64) -> ReductionCertificate {
        ReductionCertificate {
            source: CohomologyQuery { i, twist: m },
            target: CohomologyQuery { i, twist: self.reduced_twist(m) },
            rule_trace: [
                RewriteStep::ProjectionFormula,
                RewriteStep::FrobeniusPullbackPower,
                RewriteStep::PushforwardCohomologyIdentity,
            ],
        }
    }

    /// dim H^i(E(m)), via the reduction.
    pub fn h(&self, i: u8, m: i64) -> Result<BigUint, Error> {
        self.model.h(i, self.reduce(i, m).target.twist)
    }
}

impl CohomologyOracle for FrobeniusPushforward {
    fn model(&self) -> &HypersurfaceModel {
        &self.model
    }

    fn reduced_twist(&self, m: i64) -> i64 {
        let p = self.model.characteristic() as i128;
        let s = self.model.polarization_scale() as i128;
        let k = self.inner_twist as i128
            + p * s * (self.outer_twist as i128 + m as i128);
        i64::try_from(k).expect("reduced twist fits in i64")
    }
}
