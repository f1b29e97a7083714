use crate::error::CliError;
use qsic::ClassificationResult;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportError {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

/// Machine-readable classification outcome. Exactly one of `case` and
/// `error` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputReport {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<String>,
    /// Sequence observed for the input pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature_sequence: Option<String>,
    /// The table's listing for the same class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub listed_sequence: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_key: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disambiguator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ReportError>,
}

impl OutputReport {
    pub fn from_result(r: &ClassificationResult) -> Self {
        OutputReport {
            format_version: FORMAT_VERSION,
            case: Some(r.case_id()),
            segre: Some(r.case.segre.to_string()),
            signature_sequence: Some(r.sequence.to_string()),
            listed_sequence: Some(r.listed_sequence().to_string()),
            canonical_key: Some(r.key.to_string()),
            description: Some(r.case.description.clone()),
            disambiguator: Some(r.disambiguator.as_str().to_string()),
            error: None,
        }
    }

    pub fn from_error(e: &CliError) -> Self {
        OutputReport {
            format_version: FORMAT_VERSION,
            case: None,
            segre: None,
            signature_sequence: None,
            listed_sequence: None,
            canonical_key: None,
            description: None,
            disambiguator: None,
            error: Some(ReportError { kind: e.kind().to_string(), message: e.to_string(), exit_code: e.exit_code() }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let r: OutputReport = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if r.format_version != FORMAT_VERSION {
            return Err(format!("unsupported format_version {}", r.format_version));
        }
        if r.case.is_some() == r.error.is_some() {
            return Err("a report carries exactly one of `case` and `error`".into());
        }
        Ok(r)
    }

    pub fn to_text(&self) -> String {
        if let Some(e) = &self.error {
            return format!("error: {}\n", e.message);
        }
        let f = |o: &Option<String>| o.clone().unwrap_or_default();
        format!(
            "case {}: {}\nsegre: {}\nsignature sequence: {}\ntable listing: {}\ncanonical key: {}\ndisambiguator: {}\n",
            self.case.unwrap_or_default(),
            f(&self.description),
            f(&self.segre),
            f(&self.signature_sequence),
            f(&self.listed_sequence),
            f(&self.canonical_key),
            f(&self.disambiguator),
        )
    }
}
