//! Split, pseudo-split and Nordhaus-Gaddum recognition, the exceptional
//! families, and the contraction witness searches.

mod exceptional;
mod ks;
mod ng;
mod pseudo;
mod report;
mod witness;

pub use exceptional::{detect_exceptional, k2l_parameter, ExceptionalFamily};
pub use ks::{
    classify_ks_case, is_balanced_split, is_split, is_split_degrees, is_split_forbidden, is_star, ks_partition,
    star_size, KSCase, KSPartition,
};
pub use ng::{has_c5_decomposition, is_ng_by_characterisation, is_ng_by_contraction, is_ng_by_definition};
pub use pseudo::{is_pseudo_split, pseudo_split_decompose, PseudoSplitDecomposition};
pub use report::{classify, ClassificationReport, Witness};
pub use witness::{
    find_2k2_witness, find_c4_witness, find_nonsplit_witness, find_unbalanced_witness, is_unbalanced_witness,
};
