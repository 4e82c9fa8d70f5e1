//! Block decomposition at separation pairs, triangle-decomposition
//! classification and the reduction of 3-connected Laman graphs.

mod blocks;
mod classify;
mod reduce;

pub use blocks::{decompose_unique, decompose_unique_by, Block, BlockDecomposition, Separation};
pub use classify::{qs_classify, QsClassification, QsVerdict};
pub use reduce::{
    is_doublet, reduce_step, reduce_to_terminal, terminal_kind, ReductionRound, ReductionTrace, StepDetail, StepKind,
    StepRecord, Terminal, TerminalKind,
};
