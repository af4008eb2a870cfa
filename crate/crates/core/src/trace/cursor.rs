use std::sync::Arc;

use super::{Frame, Trace, TraceError};

/// Two-list navigation over a trace's frames.
///
/// `processed` holds frames already shown, most recent first; `unprocessed`
/// holds the current frame at its head followed by the frames still to
/// come. `unprocessed` is never empty. Every move returns a new cursor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VizCursor {
    // both stored back-to-front so the heads sit at the end of each Vec
    pimgs: Vec<Arc<Frame>>,
    upimgs: Vec<Arc<Frame>>,
}

/// A cursor with every frame unprocessed; the first frame is current.
pub fn cursor_new(trace: &Trace) -> Result<VizCursor, TraceError> {
    VizCursor::from_frames(trace.frames().to_vec())
}

impl VizCursor {
    pub fn from_frames(frames: Vec<Frame>) -> Result<Self, TraceError> {
        if frames.is_empty() {
            return Err(TraceError::Empty);
        }
        Ok(VizCursor {
            pimgs: Vec::new(),
            upimgs: frames.into_iter().rev().map(Arc::new).collect(),
        })
    }

    pub fn current(&self) -> &Frame {
        self.upimgs.last().expect("upimgs is never empty")
    }

    /// Position of the current frame, counting from 0.
    pub fn position(&self) -> usize {
        self.pimgs.len()
    }

    pub fn len(&self) -> usize {
        self.pimgs.len() + self.upimgs.len()
    }

    /// Always false: a cursor holds at least one frame.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn at_start(&self) -> bool {
        self.pimgs.is_empty()
    }

    pub fn at_end(&self) -> bool {
        self.upimgs.len() == 1
    }

    /// Processed frames, most recently shown first.
    pub fn processed(&self) -> impl Iterator<Item = &Frame> {
        self.pimgs.iter().rev().map(|f| f.as_ref())
    }

    /// Unprocessed frames, current frame first.
    pub fn unprocessed(&self) -> impl Iterator<Item = &Frame> {
        self.upimgs.iter().rev().map(|f| f.as_ref())
    }

    /// Moves the current frame to the processed list. No-op on the last frame.
    pub fn next(&self) -> Self {
        let mut c = self.clone();
        if !c.at_end() {
            let f = c.upimgs.pop().expect("nonempty");
            c.pimgs.push(f);
        }
        c
    }

    /// Moves the most recent processed frame back to current. No-op on the first frame.
    pub fn prev(&self) -> Self {
        let mut c = self.clone();
        if let Some(f) = c.pimgs.pop() {
            c.upimgs.push(f);
        }
        c
    }

    /// Moves every frame but the last to the processed list.
    pub fn end(&self) -> Self {
        let mut c = self.clone();
        while c.upimgs.len() > 1 {
            let f = c.upimgs.pop().expect("nonempty");
            c.pimgs.push(f);
        }
        c
    }

    /// Moves every frame back to the unprocessed list.
    pub fn start(&self) -> Self {
        let mut c = self.clone();
        while let Some(f) = c.pimgs.pop() {
            c.upimgs.push(f);
        }
        c
    }
}
