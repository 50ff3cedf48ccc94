//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A kernel design request that cannot be satisfied (bad support, band
    /// edge, or too few frequency samples).
    #[error("invalid design spec: {0}")]
    InvalidDesign(String),

    /// Kernel pair support does not match the design spec it is scored
    /// against.
    #[error("kernel support {pair} does not match spec support {spec}")]
    SupportMismatch { pair: usize, spec: usize },

    /// The constrained least-squares solve failed; this indicates a bug or a
    /// degenerate frequency grid, not a user error.
    #[error("kernel design solve failed: {0}")]
    DesignSolve(String),

    /// Grid construction or validation failure.
    #[error("invalid energy grid: {0}")]
    InvalidGrid(String),

    /// Detector or medium model parameters out of range.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Grid spacing too coarse to resolve the photopeak at the low edge.
    #[error("grid spacing {spacing} keV exceeds half the minimum FWHM {fwhm} keV; the photopeak would alias")]
    GridTooCoarse { spacing: f64, fwhm: f64 },

    /// Two operators built on different grids cannot be composed.
    #[error("energy grids do not match")]
    GridMismatch,

    /// A spectral line lies outside the energy grid.
    #[error("line energy {energy} keV outside grid [{lo}, {hi}] keV")]
    LineOutsideGrid { energy: f64, lo: f64, hi: f64 },

    /// Channel width must be an integer multiple of the grid spacing.
    #[error("channel width {epsilon} keV is not an integer multiple of grid spacing {spacing} keV")]
    EpsilonNotMultiple { epsilon: f64, spacing: f64 },

    /// Channel range does not fit inside the grid.
    #[error("channelization does not fit the grid: {0}")]
    ChannelRange(String),

    /// Histogram invariant violation (length, negative counts, ...).
    #[error("invalid histogram: {0}")]
    InvalidHistogram(String),

    /// Realization of an all-zero expected histogram is undefined.
    #[error("expected histogram has zero total mass")]
    ZeroMass,

    /// Histogram too short for the requested surface margin.
    #[error("histogram has {len} channels, need at least {need}")]
    HistogramTooShort { len: usize, need: usize },

    /// Kernel reach exceeds the surface margin it is applied to.
    #[error("kernel needs margin {need} but surface was built with margin {margin}")]
    KernelTooWide { need: usize, margin: usize },

    /// Amplitude fit called with no candidate energies.
    #[error("no candidate energies to fit")]
    EmptyCandidates,

    /// Unknown kernel label in a config or CLI argument.
    #[error("unknown kernel label {0:?}")]
    UnknownKernel(String),

    /// Experiment config parse or validation failure.
    #[error("config error: {0}")]
    Config(String),

    /// File format parse failure (response matrix, histogram, ensemble CSV).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
