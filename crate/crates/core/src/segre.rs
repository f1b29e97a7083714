//! Segre characteristics such as `[(11)11]_3`, and the consistency checks
//! between a Segre characteristic and an observed signature sequence.

use std::fmt;
use std::str::FromStr;

use crate::error::{QsicError, Result};
use crate::sequence::SignatureSequence;

/// Jordan structure of the pencil: one group of block sizes per distinct
/// eigenvalue, plus the number of distinct real eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segre {
    groups: Vec<Vec<u8>>,
    real_roots: u8,
}

impl Segre {
    pub fn groups(&self) -> &[Vec<u8>] {
        &self.groups
    }

    pub fn real_roots(&self) -> u8 {
        self.real_roots
    }
}

impl FromStr for Segre {
    type Err = QsicError;

    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| QsicError::SegreSyntax(format!("{m} in {s:?}"));
        let t = s.trim();
        let (body, sub) = t
            .strip_prefix('[')
            .and_then(|r| r.split_once("]_"))
            .ok_or_else(|| err("expected [..]_k"))?;
        let real_roots: u8 = sub.parse().map_err(|_| err("bad subscript"))?;
        let mut groups = Vec::new();
        let mut open: Option<Vec<u8>> = None;
        for c in body.chars() {
            match (c, &mut open) {
                ('(', None) => open = Some(Vec::new()),
                (')', Some(g)) if g.len() >= 2 => groups.push(std::mem::take(g)),
                (')', Some(_)) => return Err(err("a bracketed group needs two blocks")),
                (d, Some(g)) if d.is_ascii_digit() => g.push(d as u8 - b'0'),
                (d, None) if d.is_ascii_digit() => groups.push(vec![d as u8 - b'0']),
                _ => return Err(err("unexpected character")),
            }
            if c == ')' {
                open = None;
            }
        }
        if open.is_some() {
            return Err(err("unclosed group"));
        }
        let total: u32 = groups.iter().flatten().map(|&b| b as u32).sum();
        if total != 4 || groups.iter().flatten().any(|&b| b == 0) {
            return Err(err("block sizes must be positive and sum to 4"));
        }
        if real_roots as usize > groups.len() {
            return Err(err("more real roots than eigenvalues"));
        }
        Ok(Segre { groups, real_roots })
    }
}

impl fmt::Display for Segre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for g in &self.groups {
            let digits: String = g.iter().map(|b| b.to_string()).collect();
            if g.len() > 1 {
                write!(f, "({digits})")?;
            } else {
                write!(f, "{digits}")?;
            }
        }
        write!(f, "]_{}", self.real_roots)
    }
}

/// Checks that `seq` is consistent with the Jordan structure `segre`:
/// every real root matches a group whose size is the multiplicity and whose
/// block count is the corank, index jumps are bounded by the odd blocks with
/// the same parity, the one-sided jumps are bounded by the corank, and the
/// unmatched groups pair up as complex conjugates.
pub fn check_jump_rules(segre: &Segre, seq: &SignatureSequence) -> std::result::Result<(), String> {
    let roots = seq.roots();
    if roots.len() != segre.real_roots as usize {
        return Err(format!(
            "{} real roots observed, Segre symbol has {}",
            roots.len(),
            segre.real_roots
        ));
    }
    let segs = seq.segments();
    for (i, r) in roots.iter().enumerate() {
        let z = r.corank() as i8;
        let down = segs[i] as i8 - r.p as i8;
        let up = segs[i + 1] as i8 - r.p as i8;
        if !(0..=z).contains(&down) || !(0..=z).contains(&up) {
            return Err(format!("one-sided jumps at root {} exceed corank {z}", i + 1));
        }
    }
    let mut used = vec![false; segre.groups.len()];
    if assign(segre, seq, 0, &mut used) {
        Ok(())
    } else {
        Err(format!("no assignment of {segre} blocks matches {seq}"))
    }
}

fn root_fits(group: &[u8], mult: u8, corank: u8, jump: i8) -> bool {
    let odd = group.iter().filter(|&&b| b % 2 == 1).count() as i8;
    group.iter().sum::<u8>() == mult
        && group.len() as u8 == corank
        && jump.abs() <= odd
        && (jump - odd).rem_euclid(2) == 0
}

fn assign(segre: &Segre, seq: &SignatureSequence, i: usize, used: &mut [bool]) -> bool {
    let roots = seq.roots();
    if i == roots.len() {
        let rest: Vec<&Vec<u8>> = segre
            .groups
            .iter()
            .zip(used.iter())
            .filter(|(_, &u)| !u)
            .map(|(g, _)| g)
            .collect();
        return conjugate_pairs(rest);
    }
    let r = roots[i];
    let jump = seq.jumps()[i];
    for k in 0..segre.groups.len() {
        if !used[k] && root_fits(&segre.groups[k], r.mult, r.corank(), jump) {
            used[k] = true;
            if assign(segre, seq, i + 1, used) {
                return true;
            }
            used[k] = false;
        }
    }
    false
}

fn conjugate_pairs(mut rest: Vec<&Vec<u8>>) -> bool {
    if rest.len() % 2 == 1 {
        return false;
    }
    let mut sorted: Vec<Vec<u8>> = rest
        .drain(..)
        .map(|g| {
            let mut g = g.clone();
            g.sort_unstable();
            g
        })
        .collect();
    sorted.sort();
    sorted.chunks(2).all(|c| c[0] == c[1])
}
