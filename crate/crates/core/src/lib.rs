//! Spanning edge-colorings of complete r-partite r-uniform hypergraphs and
//! the minimum number of monochromatic components that cover every vertex.
//!
//! ```
//! use covnum::constructions::cyclic_biclique;
//! use covnum::harness::{sweep, SweepConfig, Symmetry};
//! use covnum::{decompose, make_shape, min_cover_exact, CoverInstance};
//!
//! // K_{3,3} colored so that every color class is a perfect matching
//! let coloring = cyclic_biclique(3)?;
//! let instance = CoverInstance::new(&decompose(&coloring));
//! let cover = min_cover_exact(&instance, None);
//! assert_eq!(cover.cover().map(|c| c.len()), Some(3));
//!
//! // every spanning 4-coloring of the 3-partite 2+2+2 hypergraph has a 2-cover
//! let shape = make_shape(3, 4, &[2, 2, 2])?;
//! let summary = sweep(&SweepConfig::new(shape).with_symmetry(Symmetry::ColorCanonical))?;
//! assert_eq!((summary.violations, summary.max_min_cover), (0, Some(2)));
//! # Ok::<(), covnum::Error>(())
//! ```

pub mod coloring;
pub mod components;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod harness;
pub mod mask;
pub mod ryser;
pub mod shape;

pub use coloring::{EdgeColoring, Spanning};
pub use components::{
    decompose, hamming, vector_of, ColorPartition, ComponentTable, ComponentVector,
};
pub use cover::{
    min_cover_exact, min_cover_greedy, min_cover_size, validate_cover, ComponentRef, Cover,
    CoverCheck, CoverInstance, CoverOutcome,
};
pub use error::{Error, Result};
pub use shape::{make_shape, Shape, VertexId};
