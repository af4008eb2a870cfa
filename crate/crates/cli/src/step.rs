//! Terminal stepper over a saved trace.

use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use anyhow::{bail, Context, Result};
use crossterm::event::{self, Event, KeyCode, KeyEventKind, KeyModifiers};
use crossterm::terminal::{self, Clear, ClearType};
use crossterm::{cursor, execute};

use gnfakit::trace::{cursor_new, frame_to_dot};
use gnfakit::{Trace, VizCursor};

use crate::dot_file_name;

/// Environment variable naming an external DOT renderer. It is run as
/// `$GNFAKIT_DOT_CMD <frame.dot>`.
const RENDERER_VAR: &str = "GNFAKIT_DOT_CMD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Key {
    Next,
    Prev,
    End,
    Start,
    Quit,
}

impl Key {
    fn from_char(c: char) -> Option<Key> {
        match c {
            'n' | 'l' => Some(Key::Next),
            'p' | 'h' => Some(Key::Prev),
            'e' | 'j' => Some(Key::End),
            's' | 'k' => Some(Key::Start),
            'q' => Some(Key::Quit),
            _ => None,
        }
    }

    fn apply(self, c: &VizCursor) -> VizCursor {
        match self {
            Key::Next => c.next(),
            Key::Prev => c.prev(),
            Key::End => c.end(),
            Key::Start => c.start(),
            Key::Quit => c.clone(),
        }
    }
}

struct Stepper {
    dot_dir: PathBuf,
    renderer: Option<String>,
}

impl Stepper {
    /// Writes the frame's DOT file and returns its path.
    fn dot_path(&self, c: &VizCursor) -> Result<PathBuf> {
        let frame = c.current();
        let path = self.dot_dir.join(dot_file_name(frame.index));
        let dot = frame_to_dot(frame);
        if fs::read_to_string(&path).ok().as_deref() != Some(dot.as_str()) {
            fs::write(&path, dot).with_context(|| format!("cannot write {}", path.display()))?;
        }
        Ok(path)
    }

    /// Lines describing the current frame. `nl` is the line terminator, since
    /// raw mode needs explicit carriage returns.
    fn show(&self, out: &mut impl Write, c: &VizCursor, nl: &str) -> Result<()> {
        let frame = c.current();
        write!(
            out,
            "[{}/{}] {}{nl}",
            frame.index,
            c.len() - 1,
            frame.message
        )?;
        if !frame.highlights.is_empty() {
            write!(out, "  highlighted: {}{nl}", frame.highlights.join(" "))?;
        }
        let path = self.dot_path(c)?;
        match &self.renderer {
            None => write!(out, "  dot: {}{nl}", path.display())?,
            Some(cmd) => {
                out.flush()?;
                let mut parts = cmd.split_whitespace();
                let program = parts.next().context("empty renderer command")?;
                let status = Command::new(program)
                    .args(parts)
                    .arg(&path)
                    .status()
                    .with_context(|| format!("cannot run renderer {cmd:?}"))?;
                if !status.success() {
                    write!(out, "  renderer exited with {status}{nl}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn cmd_step(trace_path: &Path, keys: Option<&str>, dot_dir: Option<&Path>) -> Result<ExitCode> {
    let text = fs::read_to_string(trace_path)
        .with_context(|| format!("cannot read {}", trace_path.display()))?;
    let trace: Trace = serde_json::from_str(&text)
        .with_context(|| format!("invalid trace in {}", trace_path.display()))?;
    let cur = cursor_new(&trace)?;
    let dot_dir = match dot_dir {
        Some(d) => d.to_path_buf(),
        None => trace_path
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_default(),
    };
    let stepper = Stepper {
        dot_dir,
        renderer: std::env::var(RENDERER_VAR)
            .ok()
            .filter(|s| !s.trim().is_empty()),
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Some(keys) = keys {
        replay(&stepper, &mut out, cur, keys)?;
    } else if io::stdin().is_terminal() && io::stdout().is_terminal() {
        drop(out);
        interactive(&stepper, cur)?;
    } else {
        let mut c = cur;
        loop {
            stepper.show(&mut out, &c, "\n")?;
            if c.at_end() {
                break;
            }
            c = c.next();
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn replay(stepper: &Stepper, out: &mut impl Write, mut c: VizCursor, keys: &str) -> Result<()> {
    stepper.show(out, &c, "\n")?;
    for ch in keys.chars().filter(|ch| !ch.is_whitespace()) {
        let Some(key) = Key::from_char(ch) else {
            bail!("unknown key {ch:?}; use n, p, e, s or q");
        };
        if key == Key::Quit {
            break;
        }
        c = key.apply(&c);
        stepper.show(out, &c, "\n")?;
    }
    Ok(())
}

fn interactive(stepper: &Stepper, cur: VizCursor) -> Result<()> {
    terminal::enable_raw_mode()?;
    let result = event_loop(stepper, cur);
    terminal::disable_raw_mode()?;
    println!();
    result
}

fn event_loop(stepper: &Stepper, mut c: VizCursor) -> Result<()> {
    let mut out = io::stdout();
    loop {
        execute!(out, Clear(ClearType::All), cursor::MoveTo(0, 0))?;
        stepper.show(&mut out, &c, "\r\n")?;
        write!(
            out,
            "\r\n→ next   ← previous   ↓ end   ↑ start   q quit\r\n"
        )?;
        out.flush()?;

        let key = loop {
            let Event::Key(ev) = event::read()? else {
                continue;
            };
            if ev.kind != KeyEventKind::Press {
                continue;
            }
            let key = match ev.code {
                KeyCode::Right => Some(Key::Next),
                KeyCode::Left => Some(Key::Prev),
                KeyCode::Down => Some(Key::End),
                KeyCode::Up => Some(Key::Start),
                KeyCode::Esc => Some(Key::Quit),
                KeyCode::Char('c') if ev.modifiers.contains(KeyModifiers::CONTROL) => {
                    Some(Key::Quit)
                }
                KeyCode::Char(ch) => Key::from_char(ch),
                _ => None,
            };
            if let Some(k) = key {
                break k;
            }
        };
        if key == Key::Quit {
            return Ok(());
        }
        c = key.apply(&c);
    }
}
