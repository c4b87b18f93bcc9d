//! Executable versions of the objects used to argue that diameter-two graphs
//! of high connectivity are Class 0: the zero/unit/big partition, the
//! blow-up graph and its separators, the greedy choice of bigs and the
//! terminal path families, plus an audit that checks every inequality on a
//! concrete unreachable configuration.

mod audit;
mod blowup;
mod families;
mod partition;
mod separator;

pub use audit::{audit_counterexample, AuditReport, AuditStatus, ClaimVerdict, Verdict, VertexAudit};
pub use blowup::{blowup_graph, BlowupGraph, BlowupNode};
pub use families::{
    select_b0, terminal_families, B0Selection, B0Step, RootFamily, Separators, TerminalFamilies, TerminalPath,
};
pub use partition::{zub_partition, Fraction, ZubPartition};
pub use separator::{claim1_bound, claim1_family, min_separator, PathFamily, SeparatorReport};
