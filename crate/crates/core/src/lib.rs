//! Exact weight enumerators and MacWilliams identities for codes over finite abelian groups,
//! `Z_n`, finite fields and finite chain rings.

pub mod alphabet;
pub mod characters;
pub mod cli;
pub mod codes;
pub mod cyclotomic;
pub mod enumerators;
pub mod graymap;

pub use alphabet::{Alphabet, AlphabetError, AlphabetSpec, ChainInfo, Element};
pub use characters::{euclidean_inner, Duality, DualityError};
pub use cyclotomic::{cyclotomic_polynomial, CycError, CycInt};
pub use codes::{Code, CodeError, CodeKind, Filtration, Limits, Pairing, StandardForm, TypeProfile, Word};
pub use enumerators::{
    enumerate, hamming_substitution, hamming_we, hamming_we_of_words, ocrw, psi, theta, verify_identity, EnumError, IdentityReport,
    KrawtchoukMatrix, LambdaMode, MultiPoly, Partition, PartitionKind,
};
pub use graymap::{crw_substitution, gray_report, homogeneous_weight, GrayError, GrayParams, GrayReport};
