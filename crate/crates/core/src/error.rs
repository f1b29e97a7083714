use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsicError {
    #[error("all ten quadric coefficients are zero")]
    ZeroForm,

    /// Both inputs describe the same quadric; there is no curve to classify.
    #[error("the two quadrics are proportional (identical surfaces), so they span no pencil")]
    ProportionalForms,

    /// `det(λA - B)` vanishes identically. This happens exactly when both
    /// quadrics are singular with a common singular point; the intersection
    /// then reduces to a problem about conics in a plane and is not one of
    /// the 35 classified morphologies.
    #[error("degenerate pencil: det(λA - B) vanishes identically (both quadrics singular at a common point)")]
    DegeneratePencil,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("polynomial degree too low")]
    DegreeTooLow,

    #[error("interval does not enclose a root of the characteristic polynomial")]
    NotARoot,

    #[error("key `{0}` is not shared by several morphology cases")]
    NotACollisionKey(String),

    #[error("signature sequence {sequence} (canonical key `{key}`) is not in the classification table")]
    TableMiss { sequence: String, key: String },

    #[error("malformed signature sequence `{0}`")]
    SequenceSyntax(String),

    #[error("malformed Segre characteristic `{0}`")]
    SegreSyntax(String),

    #[error("invalid classification table: {0}")]
    InvalidTable(String),
}

pub type Result<T, E = QsicError> = std::result::Result<T, E>;
