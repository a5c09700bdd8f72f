//! Exceptional collections, clusters and strand/arc diagrams for straight
//! quivers of type A and affine A.

pub mod affine;
pub mod cluster;
pub mod counting;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod quiver;
pub mod render;
pub mod strands;
pub mod typea;
