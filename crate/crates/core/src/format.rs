//! Plain-text file formats.
//!
//! Profile:
//! ```text
//! n k
//! <order 1: space-separated permutation of 0..n>
//! ...
//! <order 2k-1>
//! ```
//!
//! Tournament: a header line `n`, then one line per vertex `u`. Each line is
//! either a row of `n` characters `0`/`1` (bit `v` set means `u -> v`) or a
//! space-separated list of out-neighbours. Rows are what the writer emits.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::order::LinearOrder;
use crate::profile::Profile;
use crate::tournament::Tournament;

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn parse_ids(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) => Ok(v),
            Err(_) => perr(line_no, format!("not a vertex id: {tok:?}")),
        })
        .collect()
}

pub fn write_profile(p: &Profile) -> String {
    let mut out = format!("{} {}\n", p.n(), p.k());
    for o in p.orders() {
        let line: Vec<String> = o.seq().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_profile(text: &str) -> Result<Profile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let head = parse_ids(1, header)?;
    let [n, k] = head[..] else {
        return perr(1, "header must be \"n k\"");
    };
    if k == 0 {
        return perr(1, "k must be at least 1");
    }
    let mut orders = Vec::with_capacity(2 * k - 1);
    for _ in 0..2 * k - 1 {
        let Some((no, line)) = lines.next() else {
            return perr(orders.len() + 2, format!("expected {} orders", 2 * k - 1));
        };
        let seq = parse_ids(no, line)?;
        if seq.len() != n {
            return perr(no, format!("order has {} entries, expected {n}", seq.len()));
        }
        orders.push(LinearOrder::new(seq).or_else(|e| perr(no, e.to_string()))?);
    }
    if let Some((no, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return perr(no, format!("trailing content: {extra:?}"));
    }
    Profile::new(k, orders)
}

pub fn write_tournament(t: &Tournament) -> String {
    let n = t.n();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 8);
    out.push_str(&format!("{n}\n"));
    for u in 0..n {
        out.extend((0..n).map(|v| if t.has_edge(u, v) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn read_tournament(text: &str) -> Result<Tournament> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let n: usize = match header.trim().parse() {
        Ok(n) => n,
        Err(_) => return perr(1, "header must be the vertex count"),
    };
    let mut adj = vec![vec![false; n]; n];
    for (u, row) in adj.iter_mut().enumerate() {
        let no = u + 2;
        let line = lines.next().unwrap_or("");
        let trimmed = line.trim();
        let is_row = trimmed.len() == n && trimmed.bytes().all(|b| b == b'0' || b == b'1');
        if is_row {
            for (v, b) in trimmed.bytes().enumerate() {
                row[v] = b == b'1';
            }
        } else {
            for v in parse_ids(no, trimmed)? {
                if v >= n {
                    return perr(no, format!("vertex {v} out of range"));
                }
                row[v] = true;
            }
        }
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return perr(n + 2, "trailing content");
    }
    Tournament::from_adjacency(n, |u, v| adj[u][v])
}

/// Hex SHA-256 of a byte string; used for fixture digests and command echoes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
