use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),
    #[error("labeled enumeration is limited to n <= {max} (got {n}); feed larger orders as a graph6 stream")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("no sample passed the filters within {attempts} attempts")]
    AttemptsExhausted { attempts: u64 },
    #[error("line {line}: {source}")]
    Graph6Line {
        line: u64,
        #[source]
        source: stabcds::Graph6Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}
