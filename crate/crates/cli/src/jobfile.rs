//! The on-disk envelope for every file the CLI reads or writes: a JSON
//! object whose `kind` field names the payload.
//!
//! The tag is spliced in and out by hand rather than with serde's tagged
//! enums: tagged deserialization buffers the payload in a way that turns
//! integer map keys (labels) into plain strings, which the payload types
//! then reject.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use lexlift::{
    ConstructionCertificate, Error, FacetSet, InscribedRealization, Lifting, PipelineSpec,
    PointConfiguration, Result, Triangulation,
};

#[derive(Clone, Debug)]
pub enum JobFile {
    PointConfiguration(PointConfiguration),
    PipelineSpec(PipelineSpec),
    Triangulation(Triangulation),
    FacetSet(FacetSet),
    Lifting(Lifting),
    Certificate(ConstructionCertificate),
    InscribedRealization(InscribedRealization),
}

impl JobFile {
    pub fn kind(&self) -> &'static str {
        match self {
            JobFile::PointConfiguration(_) => "point_configuration",
            JobFile::PipelineSpec(_) => "pipeline_spec",
            JobFile::Triangulation(_) => "triangulation",
            JobFile::FacetSet(_) => "facet_set",
            JobFile::Lifting(_) => "lifting",
            JobFile::Certificate(_) => "certificate",
            JobFile::InscribedRealization(_) => "inscribed_realization",
        }
    }

    fn payload(&self) -> Result<Value> {
        fn to_value<T: Serialize>(payload: &T) -> Result<Value> {
            serde_json::to_value(payload)
                .map_err(|e| Error::InvalidParameter(format!("cannot serialize job file: {e}")))
        }
        match self {
            JobFile::PointConfiguration(c) => to_value(c),
            JobFile::PipelineSpec(s) => to_value(s),
            JobFile::Triangulation(t) => to_value(t),
            JobFile::FacetSet(f) => to_value(f),
            JobFile::Lifting(l) => to_value(l),
            JobFile::Certificate(c) => to_value(c),
            JobFile::InscribedRealization(r) => to_value(r),
        }
    }
}

pub fn read_job(path: &Path) -> Result<JobFile> {
    let parse_error =
        |e: String| Error::InvalidParameter(format!("cannot parse {}: {e}", path.display()));
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| parse_error(e.to_string()))?;
    let object = value
        .as_object_mut()
        .ok_or_else(|| parse_error("expected a JSON object".into()))?;
    let kind = match object.remove("kind") {
        Some(Value::String(kind)) => kind,
        Some(_) => return Err(parse_error("the `kind` field must be a string".into())),
        None => return Err(parse_error("missing the `kind` field".into())),
    };

    fn from_value<T: DeserializeOwned>(value: Value) -> std::result::Result<T, String> {
        serde_json::from_value(value).map_err(|e| e.to_string())
    }
    let job = match kind.as_str() {
        "point_configuration" => from_value(value).map(JobFile::PointConfiguration),
        "pipeline_spec" => from_value(value).map(JobFile::PipelineSpec),
        "triangulation" => from_value(value).map(JobFile::Triangulation),
        "facet_set" => from_value(value).map(JobFile::FacetSet),
        "lifting" => from_value(value).map(JobFile::Lifting),
        "certificate" => from_value(value).map(JobFile::Certificate),
        "inscribed_realization" => from_value(value).map(JobFile::InscribedRealization),
        other => Err(format!("unknown job kind `{other}`")),
    };
    job.map_err(parse_error)
}

pub fn write_job(path: &Path, job: &JobFile) -> Result<()> {
    let mut value = job.payload()?;
    value
        .as_object_mut()
        .expect("job payloads are JSON objects")
        .insert("kind".to_owned(), Value::String(job.kind().to_owned()));
    let mut text = serde_json::to_string_pretty(&value)
        .map_err(|e| Error::InvalidParameter(format!("cannot serialize job file: {e}")))?;
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}
