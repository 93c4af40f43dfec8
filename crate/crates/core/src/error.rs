use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("operation is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("ideal family was truncated at {cap} ideals; the inclusion graph would be incomplete")]
    TruncatedFamily { cap: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("{what}: size {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),

    #[error("not a permutation of [{n}]: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("could not load corpus entry {path}: {message}")]
    CorpusLoad { path: String, message: String },
}
