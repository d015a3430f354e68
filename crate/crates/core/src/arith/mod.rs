//! Exact arithmetic primitives: rationals, quadratic characters, primality.

mod kronecker;
mod primes;
mod rational;

pub use kronecker::{fundamental_discriminant, is_square_free, kronecker};
pub use primes::{is_prime, primes_between, PrimeInput};
pub use rational::{q, ExactRational};
