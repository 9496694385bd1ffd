//! Graph ingestion (graph6 and edge-list text) and certificate report
//! emission (CSV and JSON).

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error, MAX_GRAPH6_VERTICES};
pub use report::{
    format_real, read_certificates_json, write_certificates_csv, write_certificates_json,
    CertificateRow, CSV_HEADER,
};
