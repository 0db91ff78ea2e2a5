//! Exact analysis of arrangements of lines and smooth conics in the complex projective
//! plane: intersection combinatorics, Jacobian syzygies, total Tjurina numbers, freeness
//! certificates, numerical bounds on multiplicity profiles, enumeration of weak
//! combinatorial types, and suspensions to surfaces in P³.

pub mod analysis;
pub mod bounds;
pub mod catalog;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod exactnum;
pub mod format;
pub mod geometry;
pub mod jacobian;
pub mod linalg;
pub mod poly;
pub mod surfaces;
