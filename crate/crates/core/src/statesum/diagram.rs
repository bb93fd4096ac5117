use std::fmt;

use crate::error::{Error, Result};
use crate::verma::BraidWord;

/// Direction in which the knot runs through a cap or cup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// right to left
    L,
    /// left to right
    R,
}

/// Morse events read bottom to top. Positions are 1-based; a crossing or
/// cap at `pos` involves strands `pos` and `pos + 1`, a cup at `pos` creates
/// them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Crossing { pos: usize, sign: i32 },
    Cap { pos: usize, orientation: Orientation },
    Cup { pos: usize, orientation: Orientation },
}

/// A (1,1)-tangle diagram: one strand enters at the bottom, one leaves at
/// the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleDiagram {
    events: Vec<Event>,
    /// `widths[k]` strands below event `k`; one more entry for the top.
    widths: Vec<usize>,
}

impl TangleDiagram {
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let mut widths = vec![1usize];
        let mut w = 1usize;
        for (k, ev) in events.iter().enumerate() {
            let bad = |what: &str| Error::Diagram(format!("event {} ({ev:?}): {what}", k + 1));
            w = match *ev {
                Event::Crossing { pos, sign } => {
                    if pos == 0 || pos + 1 > w || sign.abs() != 1 {
                        return Err(bad("crossing out of range"));
                    }
                    w
                }
                Event::Cap { pos, .. } => {
                    if pos == 0 || pos + 1 > w {
                        return Err(bad("cap out of range"));
                    }
                    w - 2
                }
                Event::Cup { pos, .. } => {
                    if pos == 0 || pos > w + 1 {
                        return Err(bad("cup out of range"));
                    }
                    w + 2
                }
            };
            widths.push(w);
        }
        if w != 1 {
            return Err(Error::Diagram(format!("a (1,1)-tangle must end with one strand, got {w}")));
        }
        let d = Self { events, widths };
        d.check_orientations()?;
        Ok(d)
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Crossing { .. })).count()
    }

    pub fn writhe(&self) -> i32 {
        self.events.iter().map(|e| if let Event::Crossing { sign, .. } = e { *sign } else { 0 }).sum()
    }

    fn check_orientations(&self) -> Result<()> {
        let walk = super::walk::traverse(self)?;
        for step in &walk {
            if let super::walk::Step::Turn { event, orientation } = *step {
                let declared = match self.events[event] {
                    Event::Cap { orientation, .. } | Event::Cup { orientation, .. } => orientation,
                    Event::Crossing { .. } => unreachable!("turns happen at caps and cups"),
                };
                if declared != orientation {
                    return Err(Error::Diagram(format!(
                        "event {} is traversed {orientation:?} but declared {declared:?}",
                        event + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parse one event per line: `X <pos> <+|->`, `CAP <pos> <l|r>`,
    /// `CUP <pos> <l|r>`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut events = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: {raw:?}", ln + 1));
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(bad());
            }
            let pos: usize = toks[1].parse().map_err(|_| bad())?;
            let orient = |t: &str| match t {
                "l" | "L" => Ok(Orientation::L),
                "r" | "R" => Ok(Orientation::R),
                _ => Err(bad()),
            };
            events.push(match toks[0].to_ascii_uppercase().as_str() {
                "X" => Event::Crossing {
                    pos,
                    sign: match toks[2] {
                        "+" => 1,
                        "-" => -1,
                        _ => return Err(bad()),
                    },
                },
                "CAP" => Event::Cap { pos, orientation: orient(toks[2])? },
                "CUP" => Event::Cup { pos, orientation: orient(toks[2])? },
                _ => return Err(bad()),
            });
        }
        Self::new(events)
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = |x: Orientation| if x == Orientation::L { "l" } else { "r" };
        for ev in &self.events {
            match *ev {
                Event::Crossing { pos, sign } => writeln!(f, "X {pos} {}", if sign > 0 { "+" } else { "-" })?,
                Event::Cap { pos, orientation } => writeln!(f, "CAP {pos} {}", o(orientation))?,
                Event::Cup { pos, orientation } => writeln!(f, "CUP {pos} {}", o(orientation))?,
            }
        }
        Ok(())
    }
}

/// Partial closure of `β`: strand 1 stays open, strands `2..n` close up on
/// the right through nested arcs. Letters are placed bottom to top in
/// reverse word order, so the last letter acts first as in the matrix
/// product.
pub fn braid_closure_diagram(braid: &BraidWord) -> Result<TangleDiagram> {
    braid.check_knot()?;
    let n = braid.strands();
    let mut events = Vec::new();
    for p in 2..=n {
        events.push(Event::Cup { pos: p, orientation: Orientation::L });
    }
    for &l in braid.letters().iter().rev() {
        events.push(Event::Crossing { pos: l.unsigned_abs() as usize, sign: l.signum() });
    }
    for p in (2..=n).rev() {
        events.push(Event::Cap { pos: p, orientation: Orientation::R });
    }
    TangleDiagram::new(events)
}
