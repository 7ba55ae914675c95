//! The explicit constructions: starters, integer paths, bipartite blocks,
//! the gluing step, certificates, and the top-level (v, t) dispatch.

pub mod bipartite;
pub mod certificate;
pub mod dispatch;
pub mod glue;
pub mod paths;
pub mod pyramidal;

pub use bipartite::{
    bipartite_generic_2t_4t, bipartite_intersecting_2t, bipartite_intersecting_4t,
    strong1_starter, strong2_starter,
};
pub use certificate::{
    check_certificate, BlockCert, CertKind, CertNode, CertOptions, CertReport, Certificate,
    GlueRule, LeafClaim, UCert, UClaim,
};
pub use dispatch::{build_unparalleled, BuildError};
pub use glue::{glue, relabel, shift_map, GlueError};
pub use paths::{check_postconditions, expected_deltas, expected_vertex_sets, paths_ab, AbPair};
pub use pyramidal::{
    dihedral_four_cycle_system, four_starter, hamiltonian_cs, int1_starter, int2_starter,
    intersecting_cs_4t, intersecting_cs_6t,
};
