//! Computable constructions from an introductory mathematical-logic course.
//!
//! | module | contents |
//! |---|---|
//! | [`prop`] | propositional syntax, truth tables, DNF, adequacy of connectives |
//! | [`sat`] | finite combinatorial problems encoded as propositional satisfiability |
//! | [`fol`] | first-order syntax, substitution, finite structures, isomorphism |
//! | [`nf`] | NNF, prenex form, Skolemization, Herbrand expansion |
//! | [`coding`] | prime-power codes of finite sequences |
//! | [`turing`] | Turing machines, prime-power machine codes, a universal machine |
//! | [`ordinal`] | Cantor normal form arithmetic below epsilon-zero, Goodstein sequences |
//! | [`hf`] | hereditarily finite sets, bounded formulas, beta coding, Gödel numbers |

pub mod coding;
pub mod fol;
pub mod hf;
pub mod nf;
pub mod ordinal;
pub mod prop;
pub mod sat;
pub mod turing;
