//! Text formats: descriptor files, vector literals, report documents.

mod descriptor;
mod literal;
mod report;

pub use descriptor::{DescriptorFile, Mode, MwParams};
pub use literal::{parse_operator, parse_weight_vector, weight_vector_json, OperatorSpec};
pub use report::{ReportDocument, TOOL_NAME, TOOL_VERSION};
