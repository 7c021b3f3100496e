use thiserror::Error;

/// Rejections from table construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("element count must be at least 1")]
    EmptyCarrier,
    #[error("operation-symbol count must be at least 1")]
    NoOperations,
    #[error("{n} elements exceed the supported maximum of {max}")]
    TooManyElements { n: usize, max: usize },
    #[error("expected {expected} table entries, found {found}")]
    WrongEntryCount { expected: usize, found: usize },
    #[error("table {table}, row {row}: expected {expected} entries, found {found}")]
    RaggedRow {
        table: usize,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table {table}, row {row}, column {column}: entry {value} is out of range for {n} elements")]
    EntryOutOfRange {
        table: usize,
        row: usize,
        column: usize,
        value: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("element index {index} is out of range for {n} elements")]
    Element { index: usize, n: usize },
    #[error("operation index {index} is out of range for {k} operations")]
    Operation { index: usize, k: usize },
}
