//! Flattened output records, their text formats, and the range and
//! verification drivers behind the command-line tool.

mod csv_format;
mod markdown;
mod record;
mod run;

pub use csv_format::{read_csv, write_csv};
pub use markdown::markdown_table;
pub use record::{prime_power, Diagnostic, OutputRecord, PolModRecord};
pub use run::{
    census_range, record_for, thread_pool, verify, VerifyFailure, VerifySummary, EXTRA_IDENTITIES,
};
