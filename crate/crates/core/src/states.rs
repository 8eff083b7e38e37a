//! Named states: Bell states, qubit Werner families, the qutrit Werner
//! family, maximally mixed states, and the closed-form stationary states of
//! collective decay.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, C64};
use crate::operators::{ket, qubit_index, qutrit_index};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellSign {
    Plus,
    Minus,
}

/// Which Bell state is mixed with white noise in the initial two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// r|Φ−⟩⟨Φ−| + (1−r)/4 I⊗I (case 1).
    Werner,
    /// r|Φ+⟩⟨Φ+| + (1−r)/4 I⊗I (case 2).
    WernerLike,
}

impl Family {
    pub fn case_number(self) -> u8 {
        match self {
            Family::Werner => 1,
            Family::WernerLike => 2,
        }
    }

    pub fn from_case(case: u8) -> Result<Self> {
        match case {
            1 => Ok(Family::Werner),
            2 => Ok(Family::WernerLike),
            other => Err(Error::OutOfRange(format!(
                "case must be 1 or 2, got {other}"
            ))),
        }
    }

    fn bell_sign(self) -> BellSign {
        match self {
            Family::Werner => BellSign::Minus,
            Family::WernerLike => BellSign::Plus,
        }
    }
}

/// Qutrit Werner parameter, with the η → ∞ limit kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eta {
    Finite(f64),
    Infinite,
}

impl Eta {
    pub fn validate(self) -> Result<Self> {
        match self {
            Eta::Finite(eta) if !(eta.is_finite() && eta >= 0.5) => Err(Error::OutOfRange(
                format!("eta must be finite and >= 1/2, got {eta}"),
            )),
            _ => Ok(self),
        }
    }
}

impl From<f64> for Eta {
    fn from(eta: f64) -> Self {
        Eta::Finite(eta)
    }
}

pub(crate) fn check_r(r: f64) -> Result<()> {
    if r.is_finite() && (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("r must lie in [0, 1], got {r}")))
    }
}

pub(crate) fn check_n_mean(n: f64) -> Result<()> {
    if n.is_finite() && n >= 0.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "n_mean must be finite and >= 0, got {n}"
        )))
    }
}

fn qubit_state(m: ComplexMatrix) -> Result<DensityMatrix> {
    DensityMatrix::new(m, (2, 2))
}

fn qutrit_state(m: ComplexMatrix) -> Result<DensityMatrix> {
    DensityMatrix::new(m, (3, 3))
}

/// (|10⟩ ± |01⟩)/√2.
pub fn bell_ket(sign: BellSign) -> Vec<C64> {
    let s = match sign {
        BellSign::Plus => 1.0,
        BellSign::Minus => -1.0,
    };
    ket(
        4,
        &[
            (qubit_index(1, 0), FRAC_1_SQRT_2),
            (qubit_index(0, 1), s * FRAC_1_SQRT_2),
        ],
    )
}

/// The singlet |Φ−⟩.
pub fn singlet_ket() -> Vec<C64> {
    bell_ket(BellSign::Minus)
}

pub fn bell_state(sign: BellSign) -> DensityMatrix {
    qubit_state(ComplexMatrix::projector(&bell_ket(sign))).expect("Bell projector is a state")
}

pub fn werner_qubit(r: f64, family: Family) -> Result<DensityMatrix> {
    check_r(r)?;
    let bell = ComplexMatrix::projector(&bell_ket(family.bell_sign()));
    let noise = ComplexMatrix::identity(4).scale((1.0 - r) / 4.0);
    qubit_state(&bell.scale(r) + &noise)
}

/// Tr(|Φ−⟩⟨Φ−| ρ) for the initial state of `family`: (1+3r)/4 or (1−r)/4.
pub fn initial_singlet_fraction(family: Family, r: f64) -> f64 {
    match family {
        Family::Werner => (1.0 + 3.0 * r) / 4.0,
        Family::WernerLike => (1.0 - r) / 4.0,
    }
}

pub fn maximally_mixed(da: usize, db: usize) -> Result<DensityMatrix> {
    if !matches!(da, 2 | 3) || !matches!(db, 2 | 3) {
        return Err(Error::UnsupportedDims(da, db));
    }
    let n = da * db;
    DensityMatrix::new(ComplexMatrix::identity(n).scale(1.0 / n as f64), (da, db))
}

/// (η I⊗I − (η+1)/3 · SWAP) / (8η − 1) on two qutrits.
pub fn qutrit_werner(eta: f64) -> Result<DensityMatrix> {
    Eta::Finite(eta).validate()?;
    let mut m = ComplexMatrix::identity(9).scale(eta);
    let w = (eta + 1.0) / 3.0;
    for i in 1..=3 {
        for j in 1..=3 {
            m[(qutrit_index(i, j), qutrit_index(j, i))] -= C64::new(w, 0.0);
        }
    }
    qutrit_state(m.scale(1.0 / (8.0 * eta - 1.0)))
}

/// Entries of a two-qubit X-state restricted to the pattern reached by
/// collective decay from a Werner-type input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateCoefficients {
    /// ⟨11|ρ|11⟩
    pub pop_11: f64,
    /// ⟨10|ρ|10⟩
    pub pop_10: f64,
    /// ⟨01|ρ|01⟩
    pub pop_01: f64,
    /// ⟨00|ρ|00⟩
    pub pop_00: f64,
    /// ⟨10|ρ|01⟩, real for these states
    pub coherence: f64,
}

impl XStateCoefficients {
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::from_real_diagonal(&[
            self.pop_11,
            self.pop_10,
            self.pop_01,
            self.pop_00,
        ]);
        let (i10, i01) = (qubit_index(1, 0), qubit_index(0, 1));
        m[(i10, i01)] = C64::new(self.coherence, 0.0);
        m[(i01, i10)] = C64::new(self.coherence, 0.0);
        m
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        qubit_state(self.to_matrix())
    }
}

/// Closed-form stationary coefficients for a Werner-type initial state.
///
/// With L = 1 + 3N(N+1) the singlet weight is frozen while the triplet weight
/// settles into a thermal ladder N² : N(N+1) : (N+1)² over |11⟩, |T0⟩, |00⟩.
pub fn stationary_coefficients(family: Family, r: f64, n: f64) -> Result<XStateCoefficients> {
    check_r(r)?;
    check_n_mean(n)?;
    let l = 1.0 + 3.0 * n * (n + 1.0);
    let c = match family {
        Family::Werner => {
            let pop_11 = (3.0 - 3.0 * r) * n * n / (4.0 * l);
            let pop_10 = (r - 1.0 + (2.0 + 2.0 * r) * l) / (8.0 * l);
            XStateCoefficients {
                pop_11,
                pop_10,
                pop_01: pop_10,
                pop_00: 1.0 - pop_11 - 2.0 * pop_10,
                coherence: (r - 1.0 - 4.0 * r * l) / (8.0 * l),
            }
        }
        Family::WernerLike => {
            let pop_11 = (3.0 + r) * n * n / (4.0 * l);
            let pop_10 = (-r - 3.0 + (6.0 - 2.0 * r) * l) / (24.0 * l);
            XStateCoefficients {
                pop_11,
                pop_10,
                pop_01: pop_10,
                pop_00: 1.0 - pop_11 - 2.0 * pop_10,
                coherence: (-r - 3.0 + 4.0 * r * l) / (24.0 * l),
            }
        }
    };
    Ok(c)
}

pub fn stationary_qubit(family: Family, r: f64, n: f64) -> Result<DensityMatrix> {
    stationary_coefficients(family, r, n)?.to_density()
}

/// (|3,1⟩ + |1,3⟩ − |2,2⟩)/√3.
pub fn qutrit_symmetric_ket() -> Vec<C64> {
    let s = 1.0 / 3f64.sqrt();
    ket(
        9,
        &[
            (qutrit_index(3, 1), s),
            (qutrit_index(1, 3), s),
            (qutrit_index(2, 2), -s),
        ],
    )
}

/// (|1,2⟩ − |2,1⟩)/√2.
pub fn qutrit_antisymmetric_ket() -> Vec<C64> {
    ket(
        9,
        &[
            (qutrit_index(1, 2), FRAC_1_SQRT_2),
            (qutrit_index(2, 1), -FRAC_1_SQRT_2),
        ],
    )
}

pub fn qutrit_ground_ket() -> Vec<C64> {
    ket(9, &[(qutrit_index(1, 1), 1.0)])
}

/// Stationary state reached from I/9 under zero-temperature qutrit decay.
pub fn qutrit_stationary_mixed() -> DensityMatrix {
    let ground = ComplexMatrix::projector(&qutrit_ground_ket());
    // Unnormalised kets as written: weights 1/6 and 1/27 multiply norms 2 and 3.
    let anti = ComplexMatrix::projector(&ket(
        9,
        &[(qutrit_index(1, 2), 1.0), (qutrit_index(2, 1), -1.0)],
    ));
    let sym = ComplexMatrix::projector(&ket(
        9,
        &[
            (qutrit_index(3, 1), 1.0),
            (qutrit_index(1, 3), 1.0),
            (qutrit_index(2, 2), -1.0),
        ],
    ));
    let m = &(&ground.scale(5.0 / 9.0) + &anti.scale(1.0 / 6.0)) + &sym.scale(1.0 / 27.0);
    qutrit_state(m).expect("stationary mixture is a state")
}

/// Weights of |1,1⟩, |S1⟩ and |A1⟩ in the stationary state of ρ_W(η).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritWernerWeights {
    pub ground: f64,
    pub symmetric: f64,
    pub antisymmetric: f64,
}

pub fn qutrit_stationary_weights(eta: Eta) -> Result<QutritWernerWeights> {
    Ok(match eta.validate()? {
        Eta::Finite(eta) => {
            let norm = 24.0 * eta - 3.0;
            QutritWernerWeights {
                ground: (10.0 * eta - 5.0) / norm,
                symmetric: (2.0 * eta - 1.0) / norm,
                antisymmetric: (12.0 * eta + 3.0) / norm,
            }
        }
        Eta::Infinite => QutritWernerWeights {
            ground: 10.0 / 24.0,
            symmetric: 2.0 / 24.0,
            antisymmetric: 12.0 / 24.0,
        },
    })
}

fn qutrit_stationary_from_weights(w: QutritWernerWeights) -> Result<DensityMatrix> {
    let m = &(&ComplexMatrix::projector(&qutrit_ground_ket()).scale(w.ground)
        + &ComplexMatrix::projector(&qutrit_symmetric_ket()).scale(w.symmetric))
        + &ComplexMatrix::projector(&qutrit_antisymmetric_ket()).scale(w.antisymmetric);
    qutrit_state(m)
}

pub fn qutrit_stationary_werner(eta: f64) -> Result<DensityMatrix> {
    qutrit_stationary_from_weights(qutrit_stationary_weights(Eta::Finite(eta))?)
}

/// η → ∞ limit of [`qutrit_stationary_werner`].
pub fn qutrit_stationary_werner_limit() -> DensityMatrix {
    qutrit_stationary_from_weights(qutrit_stationary_weights(Eta::Infinite).unwrap())
        .expect("limit mixture is a state")
}

/// Symbolic description of a closed-form stationary state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StationarySpec {
    Qubit { family: Family, r: f64, n_mean: f64 },
    QutritMixed,
    QutritWerner { eta: Eta },
}

impl StationarySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            StationarySpec::Qubit { r, n_mean, .. } => {
                check_r(r)?;
                check_n_mean(n_mean)
            }
            StationarySpec::QutritMixed => Ok(()),
            StationarySpec::QutritWerner { eta } => eta.validate().map(|_| ()),
        }
    }

    pub fn materialize(&self) -> Result<DensityMatrix> {
        match *self {
            StationarySpec::Qubit { family, r, n_mean } => stationary_qubit(family, r, n_mean),
            StationarySpec::QutritMixed => Ok(qutrit_stationary_mixed()),
            StationarySpec::QutritWerner { eta } => {
                qutrit_stationary_from_weights(qutrit_stationary_weights(eta)?)
            }
        }
    }
}
