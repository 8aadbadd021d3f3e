//! Chain complexes of free modules labelled by the simplices of a complex `K`.

mod assemble;
mod clem;
mod complex;
mod dual;
mod exact;
mod geometric;
mod hom;

pub use assemble::{assemble, check_full, split_by_labels, star_complement, star_sequence};
pub use clem::{check_star_pieces, StarPiece, StarReport};
pub use complex::{Generator, Order, RKComplex, RKMap};
pub use dual::{dual_map, dual_star, epsilon};
pub use exact::ShortExactSequence;
pub use geometric::{delta_complexes, delta_x, delta_x_oriented, delta_x_prime, DeltaComplexes};
pub use hom::{hom_post, hom_rk, HomComplex, HomEntry};
