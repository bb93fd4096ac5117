//! Following the single component of a (1,1)-tangle from the bottom.

use super::diagram::{Event, Orientation, TangleDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    /// Upward pass through a crossing, entering on the left or right.
    Cross { event: usize, from_left: bool },
    /// Turn through a cap or cup.
    Turn { event: usize, orientation: Orientation },
}

/// The ordered list of crossing passes and turns met by the strand. Every
/// crossing must be passed twice, both times upward.
pub(crate) fn traverse(d: &TangleDiagram) -> Result<Vec<Step>> {
    let events = d.events();
    let mut steps = Vec::new();
    // between event level-1 and level; level 0 is the bottom
    let mut level = 0usize;
    let mut pos = 1usize;
    let mut up = true;
    let limit = 4 * events.len() + 4;
    loop {
        if steps.len() > limit {
            return Err(Error::Diagram("strand does not reach the top".into()));
        }
        if up {
            if level == events.len() {
                if pos != 1 {
                    return Err(Error::Diagram("strand leaves at the top off position 1".into()));
                }
                break;
            }
            match events[level] {
                Event::Crossing { pos: p, .. } => {
                    if pos == p || pos == p + 1 {
                        steps.push(Step::Cross { event: level, from_left: pos == p });
                        pos = if pos == p { p + 1 } else { p };
                    }
                    level += 1;
                }
                Event::Cap { pos: p, .. } => {
                    if pos == p {
                        steps.push(Step::Turn { event: level, orientation: Orientation::R });
                        pos = p + 1;
                        up = false;
                    } else if pos == p + 1 {
                        steps.push(Step::Turn { event: level, orientation: Orientation::L });
                        pos = p;
                        up = false;
                    } else {
                        if pos > p + 1 {
                            pos -= 2;
                        }
                        level += 1;
                    }
                }
                Event::Cup { pos: p, .. } => {
                    if pos >= p {
                        pos += 2;
                    }
                    level += 1;
                }
            }
        } else {
            if level == 0 {
                return Err(Error::Diagram("strand leaves through the bottom".into()));
            }
            let ev = level - 1;
            match events[ev] {
                Event::Crossing { pos: p, .. } => {
                    if pos == p || pos == p + 1 {
                        return Err(Error::Diagram(format!(
                            "crossing {} is traversed downward; only upward crossings are supported",
                            ev + 1
                        )));
                    }
                    level -= 1;
                }
                Event::Cap { pos: p, .. } => {
                    if pos >= p {
                        pos += 2;
                    }
                    level -= 1;
                }
                Event::Cup { pos: p, .. } => {
                    if pos == p {
                        steps.push(Step::Turn { event: ev, orientation: Orientation::R });
                        pos = p + 1;
                        up = true;
                    } else if pos == p + 1 {
                        steps.push(Step::Turn { event: ev, orientation: Orientation::L });
                        pos = p;
                        up = true;
                    } else {
                        if pos > p + 1 {
                            pos -= 2;
                        }
                        level -= 1;
                    }
                }
            }
        }
    }
    let mut seen = vec![0u8; events.len()];
    for s in &steps {
        if let Step::Cross { event, .. } = s {
            seen[*event] += 1;
        }
    }
    for (k, ev) in events.iter().enumerate() {
        if matches!(ev, Event::Crossing { .. }) && seen[k] != 2 {
            return Err(Error::Diagram(format!("crossing {} is not on the knot twice; closure is not a knot", k + 1)));
        }
    }
    Ok(steps)
}
