//! Step-by-step records of a transformation.
//!
//! A [`Trace`] is the ordered list of [`Frame`]s produced by a driver. Each
//! frame snapshots the GNFA after one step together with a message and the
//! states to highlight.

mod cursor;
mod dot;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cursor::{cursor_new, VizCursor};
pub use dot::{frame_to_dot, HIGHLIGHT_COLOR, INSTRUCTIONS, START_MARKER};

use crate::gnfa::Gnfa;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub index: usize,
    pub message: String,
    pub highlights: Vec<String>,
    pub graph: Gnfa,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trace has no frames")]
    Empty,
    #[error("frame at position {position} has index {index}")]
    BadIndex { position: usize, index: usize },
    #[error("frame {index} highlights '{state}', which is not in its graph")]
    UnknownHighlight { index: usize, state: String },
}

/// A nonempty, contiguously indexed sequence of frames.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    frames: Vec<Frame>,
}

impl Trace {
    /// Starts a trace with its first frame.
    pub fn new(graph: Gnfa, message: impl Into<String>, highlights: &[&str]) -> Self {
        let mut t = Trace { frames: Vec::new() };
        t.push(graph, message, highlights);
        t
    }

    /// Checks the frame invariants of an existing list.
    pub fn from_frames(frames: Vec<Frame>) -> Result<Self, TraceError> {
        if frames.is_empty() {
            return Err(TraceError::Empty);
        }
        for (position, f) in frames.iter().enumerate() {
            if f.index != position {
                return Err(TraceError::BadIndex {
                    position,
                    index: f.index,
                });
            }
            if let Some(h) = f.highlights.iter().find(|h| !f.graph.has_state(h)) {
                return Err(TraceError::UnknownHighlight {
                    index: f.index,
                    state: h.clone(),
                });
            }
        }
        Ok(Trace { frames })
    }

    /// Appends a frame. Highlights are deduplicated, keeping first occurrences.
    pub fn push(&mut self, graph: Gnfa, message: impl Into<String>, highlights: &[&str]) {
        let mut hs: Vec<String> = Vec::new();
        for h in highlights {
            debug_assert!(graph.has_state(h), "highlighted state {h} missing");
            if !hs.iter().any(|x| x == h) {
                hs.push(h.to_string());
            }
        }
        self.frames.push(Frame {
            index: self.frames.len(),
            message: message.into(),
            highlights: hs,
            graph,
        });
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    /// Always false: traces hold at least one frame.
    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn last(&self) -> &Frame {
        self.frames.last().expect("traces are nonempty")
    }

    pub fn into_frames(self) -> Vec<Frame> {
        self.frames
    }
}

#[derive(Deserialize)]
struct RawFrame {
    index: usize,
    message: String,
    highlights: Vec<String>,
    graph: Gnfa,
}

#[derive(Deserialize)]
struct RawTrace {
    frames: Vec<RawFrame>,
}

impl<'de> Deserialize<'de> for Trace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawTrace::deserialize(deserializer)?;
        let frames = raw
            .frames
            .into_iter()
            .map(|f| Frame {
                index: f.index,
                message: f.message,
                highlights: f.highlights,
                graph: f.graph,
            })
            .collect();
        Trace::from_frames(frames).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnfa::gnfa_from_regexp;

    fn two_frames() -> Trace {
        let g = gnfa_from_regexp(&"ab".parse().unwrap());
        let mut t = Trace::new(g.clone(), "Starting ndfa.", &[]);
        t.push(g, "again", &["S", "F", "S"]);
        t
    }

    #[test]
    fn indices_and_dedup() {
        let t = two_frames();
        assert_eq!(t.len(), 2);
        assert_eq!(t.frames()[1].index, 1);
        assert_eq!(t.frames()[1].highlights, vec!["S", "F"]);
    }

    #[test]
    fn json_round_trip() {
        let t = two_frames();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"frames":[{"index":0,"message":"Starting ndfa.","highlights":[],"graph":{"states":["S","F"]"#));
        let back: Trace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_malformed_traces() {
        assert_eq!(Trace::from_frames(Vec::new()), Err(TraceError::Empty));
        let mut frames = two_frames().into_frames();
        frames[1].index = 5;
        assert!(matches!(
            Trace::from_frames(frames.clone()),
            Err(TraceError::BadIndex {
                position: 1,
                index: 5
            })
        ));
        frames[1].index = 1;
        frames[1].highlights.push("Q".into());
        assert!(matches!(
            Trace::from_frames(frames),
            Err(TraceError::UnknownHighlight { .. })
        ));
        assert!(serde_json::from_str::<Trace>(r#"{"frames":[]}"#).is_err());
    }
}
