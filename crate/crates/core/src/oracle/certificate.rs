use std::fmt;

use crate::graph::{TwoPartition, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        })
    }
}

/// Machine-checkable explanation attached to a negative answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    IsolatedVertex(Vertex),
    /// A vertex without out-neighbours can never have one across.
    SinkExists(Vertex),
    /// A non-trivial terminal strong component with no even cycle.
    NoEvenCycle {
        component: Vec<Vertex>,
    },
    /// Reduction Rule A shrank the digraph down to this single vertex.
    ReducedToSingleVertex {
        vertex: Vertex,
        steps: usize,
    },
    CharacterizationViolated(String),
    ExhaustedSearch {
        nodes: u64,
    },
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoReason::IsolatedVertex(v) => write!(f, "isolated-vertex {v}"),
            NoReason::SinkExists(v) => write!(f, "sink-exists {v}"),
            NoReason::NoEvenCycle { component } => {
                write!(f, "terminal-component-without-even-cycle {component:?}")
            }
            NoReason::ReducedToSingleVertex { vertex, steps } => {
                write!(f, "reduced-to-single-vertex {vertex} after {steps} steps")
            }
            NoReason::CharacterizationViolated(s) => write!(f, "characterization-violated: {s}"),
            NoReason::ExhaustedSearch { nodes } => write!(f, "exhausted-search after {nodes} nodes"),
        }
    }
}

/// A verdict with its evidence.
///
/// A positive certificate carries a witness unless the witness search ran
/// out of budget after the decision was already settled; `note` then says
/// so.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub answer: Answer,
    pub witness: Option<TwoPartition>,
    pub reason: Option<NoReason>,
    pub note: Option<String>,
    pub trace: Vec<String>,
}

impl Certificate {
    pub fn yes(witness: TwoPartition) -> Self {
        Certificate {
            answer: Answer::Yes,
            witness: Some(witness),
            reason: None,
            note: None,
            trace: Vec::new(),
        }
    }

    pub fn yes_without_witness(note: impl Into<String>) -> Self {
        Certificate {
            answer: Answer::Yes,
            witness: None,
            reason: None,
            note: Some(note.into()),
            trace: Vec::new(),
        }
    }

    pub fn no(reason: NoReason) -> Self {
        Certificate {
            answer: Answer::No,
            witness: None,
            reason: Some(reason),
            note: None,
            trace: Vec::new(),
        }
    }

    pub fn with_trace(mut self, trace: Vec<String>) -> Self {
        self.trace = trace;
        self
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}
