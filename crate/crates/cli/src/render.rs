use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// A command result that can be printed in every output format.
pub trait Table: Serialize {
    fn plain(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<T: Table>(value: &T, format: Format) -> String {
    match format {
        Format::Plain => value.plain(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(value.csv_header()).expect("in-memory write");
            for row in value.csv_rows() {
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
    }
}
