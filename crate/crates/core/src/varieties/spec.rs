use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The named varieties. Primed kinds live in `2n` variables `(x_i, y_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VarietyKind {
    /// `sum x_i^{q+1} = 0` in `P^{n-1}`.
    Fermat,
    /// Complement of the Fermat hypersurface in `P^{n-1}`.
    FermatComplement,
    /// `sum x_i^{q+1} = 1` in `A^n`.
    NormOne,
    /// `z^q + z = sum x_i^{q+1}` in `A^{n+1}`.
    HermitianCurveFamily,
    /// `sum (x_i^q y_i - x_i y_i^q) = 0` in `P^{2n-1}`.
    SkewFermat,
    /// Complement of the skew hypersurface in `P^{2n-1}`.
    SkewComplement,
    /// `sum (x_i^q y_i - x_i y_i^q) = 1` in `A^{2n}`.
    SkewNormOne,
    /// `z^q - z = sum (x_i y_i^q - x_i^q y_i)` in `A^{2n+1}`.
    SkewArtinSchreier,
    /// `Z_2^q Z_3 - Z_2 Z_3^q = Z_0 Z_1^q - Z_0^q Z_1` in `P^3`.
    Surface,
    /// The surface's points at infinity, `Z_3 = 0`.
    SurfaceBoundary,
    /// Zero fibre of `(x, y) -> sum (x_i y_i^q - x_i^q y_i)` on `A^{2n}`.
    ZeroFibre,
    /// The zero fibre minus the origin.
    PuncturedZeroFibre,
    /// Preimage of `G_m` under the same map.
    UnitFibre,
}

impl VarietyKind {
    pub const ALL: [VarietyKind; 13] = [
        VarietyKind::Fermat,
        VarietyKind::FermatComplement,
        VarietyKind::NormOne,
        VarietyKind::HermitianCurveFamily,
        VarietyKind::SkewFermat,
        VarietyKind::SkewComplement,
        VarietyKind::SkewNormOne,
        VarietyKind::SkewArtinSchreier,
        VarietyKind::Surface,
        VarietyKind::SurfaceBoundary,
        VarietyKind::ZeroFibre,
        VarietyKind::PuncturedZeroFibre,
        VarietyKind::UnitFibre,
    ];

    /// Short ASCII name, used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            VarietyKind::Fermat => "S",
            VarietyKind::FermatComplement => "Y",
            VarietyKind::NormOne => "Ytilde",
            VarietyKind::HermitianCurveFamily => "X",
            VarietyKind::SkewFermat => "Sprime",
            VarietyKind::SkewComplement => "Yprime",
            VarietyKind::SkewNormOne => "Ytildeprime",
            VarietyKind::SkewArtinSchreier => "Xprime",
            VarietyKind::Surface => "Xbar",
            VarietyKind::SurfaceBoundary => "D",
            VarietyKind::ZeroFibre => "Zprime",
            VarietyKind::PuncturedZeroFibre => "Zprime0",
            VarietyKind::UnitFibre => "Uprime",
        }
    }

    /// Whether the kind has a rank parameter `n`.
    pub fn takes_n(self) -> bool {
        !matches!(self, VarietyKind::Surface | VarietyKind::SurfaceBoundary)
    }
}

impl fmt::Display for VarietyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VarietyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variety {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VarietySpec {
    pub kind: VarietyKind,
    pub n: u32,
}

impl VarietySpec {
    /// `n` is ignored (and stored as 1) for the surface and its boundary.
    pub fn new(kind: VarietyKind, n: u32) -> Result<Self> {
        if !kind.takes_n() {
            return Ok(Self { kind, n: 1 });
        }
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        Ok(Self { kind, n })
    }
}
