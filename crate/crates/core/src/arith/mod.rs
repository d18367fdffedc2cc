//! Exact integer primitives: primality, prime enumeration, the Legendre and
//! Jacobi symbols, the three character families and residue classes.

mod character;
mod classify;
mod primes;
mod residues;
mod symbols;

pub use character::{char_eval, is_fundamental_discriminant, CharKind, Parity, QuadCharacter};
pub use classify::{classify, ClassifiedPrime, ResidueClass};
pub use primes::{is_prime, primes_in_range, PrimeSegments, RANGE_CAP};
pub use residues::{ResidueTable, TABLE_LIMIT};
pub use symbols::{chi4, jacobi, legendre};
