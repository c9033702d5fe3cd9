use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter token {0:?}")]
    InvalidToken(String),
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("morphism has no image for letter {0:?}")]
    MissingImage(String),
    #[error("image of {letter:?} uses letters outside the alphabet")]
    ImageOutOfAlphabet { letter: String },
    #[error("axiom set is empty")]
    NoAxioms,
    #[error("axioms must be non-empty words")]
    EmptyAxiom,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("morphism is erasing (image of {0:?} is empty); analysis requires a PDF0L system")]
    Erasing(String),
    #[error("word is empty")]
    EmptyWord,
    #[error("word {0:?} is not in the language of the system")]
    NotInLanguage(String),
    #[error("left part of a strongly synchronizing pair must be non-empty")]
    EmptyLeftPart,
    #[error("map is not injective: {0}")]
    NotInjective(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Input and parse errors, as opposed to violated analysis preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidToken(_)
                | Error::DuplicateLetter(_)
                | Error::EmptyAlphabet
                | Error::UnknownLetter(_)
                | Error::MissingImage(_)
                | Error::ImageOutOfAlphabet { .. }
                | Error::NoAxioms
                | Error::EmptyAxiom
                | Error::Parse { .. }
        )
    }
}
