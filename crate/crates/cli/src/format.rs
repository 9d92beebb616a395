//! Text formats: colored graphs, partitions and certificates.
//!
//! Colored graph: a header line `n q m`, then `m` lines `u v c` with edges in
//! lexicographic order and colors in first-use order. An uncolored graph uses
//! the same layout with `q = 1` and the color column omitted. Blank lines and
//! lines starting with `#` are ignored on input.
//!
//! Certificates and reports are `key=value` records, one per line.

use std::fmt::Write as _;

use meanrt::search::{Attestation, Certificate, CertificateKind, SearchStats};
use meanrt::{ColoredGraph, ColoringConstraint, EdgeColoring, Graph};

use crate::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, CliError> {
    tok.parse().map_err(|_| CliError::Input(format!("line {line}: expected a non-negative integer, got '{tok}'")))
}

pub fn write_colored(c: &ColoredGraph) -> String {
    let mut out = format!("{} {} {}\n", c.n(), c.q(), c.edge_count());
    for (u, v, col) in c.colored_edges() {
        let _ = writeln!(out, "{u} {v} {col}");
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} 1 {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses either layout; uncolored edges get color 0.
pub fn parse_colored(text: &str) -> Result<ColoredGraph, CliError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| CliError::Input("empty graph file".into()))?;
    let head: Vec<usize> = header.split_whitespace().map(|t| parse_usize(t, hl)).collect::<Result<_, _>>()?;
    let [n, q, m] = head[..] else {
        return Err(CliError::Input(format!("line {hl}: header must be 'n q m'")));
    };
    let mut triples = Vec::with_capacity(m);
    let mut uncolored = None;
    for (ln, line) in lines {
        let toks: Vec<usize> = line.split_whitespace().map(|t| parse_usize(t, ln)).collect::<Result<_, _>>()?;
        let (edge, plain) = match toks[..] {
            [u, v] => ((u, v, 0u32), true),
            [u, v, c] => ((u, v, c as u32), false),
            _ => return Err(CliError::Input(format!("line {ln}: expected 'u v' or 'u v c'"))),
        };
        if *uncolored.get_or_insert(plain) != plain {
            return Err(CliError::Input(format!("line {ln}: mixes colored and uncolored edges")));
        }
        triples.push(edge);
    }
    if triples.len() != m {
        return Err(CliError::Input(format!("header announces {m} edges, file has {}", triples.len())));
    }
    let coloring = EdgeColoring::from_colored_edges(n, triples)?;
    let q_ok = match uncolored {
        Some(true) => q == 1,
        Some(false) => q == coloring.q(),
        None => q <= 1,
    };
    if !q_ok {
        return Err(CliError::Input(format!("header announces {q} colors, edges use {}", coloring.q())));
    }
    Ok(coloring)
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    parse_colored(text).map(|c| c.host().clone())
}

/// One class per line, vertex ids separated by whitespace.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    content_lines(text).map(|(ln, line)| line.split_whitespace().map(|t| parse_usize(t, ln)).collect()).collect()
}

fn edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

fn colored_edge_list(c: &ColoredGraph) -> String {
    c.colored_edges().map(|(u, v, col)| format!("{u}-{v}:{col}")).collect::<Vec<_>>().join(",")
}

pub fn write_certificate(cert: &Certificate) -> String {
    let a = &cert.attestation;
    let mut out = String::new();
    let mut kv = |k: &str, v: &dyn std::fmt::Display| {
        let _ = writeln!(out, "{k}={v}");
    };
    kv("kind", &cert.kind.name());
    kv("value", &cert.value);
    kv("n", &a.n);
    kv("pattern_n", &a.pattern.n());
    kv("pattern_edges", &edge_list(&a.pattern));
    match &a.constraint {
        Some(c) => kv("constraint", c),
        None => kv("constraint", &"none"),
    }
    kv("nodes", &a.stats.nodes);
    kv("pruned_pattern", &a.stats.pruned_pattern);
    kv("pruned_constraint", &a.stats.pruned_constraint);
    kv("pruned_isomorph", &a.stats.pruned_isomorph);
    kv("graphs_examined", &a.graphs_examined);
    kv("search_space", &a.search_space);
    kv("engine_version", &a.engine_version);
    if let Some(w) = &cert.witness {
        kv("witness_n", &w.n());
        kv("witness_edges", &colored_edge_list(w));
    }
    out
}

fn split_pair(s: &str, sep: char) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("bad edge '{s}'"));
    let (a, b) = s.split_once(sep).ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

pub fn parse_certificate(text: &str) -> Result<Certificate, CliError> {
    let mut map = std::collections::BTreeMap::new();
    for (ln, line) in content_lines(text) {
        let (k, v) = line.split_once('=').ok_or_else(|| CliError::Input(format!("line {ln}: expected key=value")))?;
        map.insert(k.to_string(), v.to_string());
    }
    let get = |k: &str| map.get(k).ok_or_else(|| CliError::Input(format!("certificate lacks '{k}'")));
    let num = |k: &str| -> Result<u64, CliError> {
        get(k)?.parse().map_err(|_| CliError::Input(format!("certificate field '{k}' is not a number")))
    };
    let kind = CertificateKind::from_name(get("kind")?)
        .ok_or_else(|| CliError::Input(format!("unknown certificate kind '{}'", map["kind"])))?;
    let pattern_edges = get("pattern_edges")?;
    let pattern = Graph::from_edges(
        num("pattern_n")? as usize,
        pattern_edges
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| split_pair(s, '-'))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let constraint = match get("constraint")?.as_str() {
        "none" => None,
        s => Some(s.parse::<ColoringConstraint>()?),
    };
    let witness = match map.get("witness_n") {
        None => None,
        Some(wn) => {
            let wn: usize = wn.parse().map_err(|_| CliError::Input("bad witness_n".into()))?;
            let triples = get("witness_edges")?
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let (e, c) = s.split_once(':').ok_or_else(|| CliError::Input(format!("bad edge '{s}'")))?;
                    let (u, v) = split_pair(e, '-')?;
                    let c: u32 = c.parse().map_err(|_| CliError::Input(format!("bad color in '{s}'")))?;
                    Ok((u, v, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Some(EdgeColoring::from_colored_edges(wn, triples)?)
        }
    };
    Ok(Certificate {
        kind,
        value: num("value")?,
        witness,
        attestation: Attestation {
            n: num("n")? as usize,
            pattern,
            constraint,
            stats: SearchStats {
                nodes: num("nodes")?,
                pruned_pattern: num("pruned_pattern")?,
                pruned_constraint: num("pruned_constraint")?,
                pruned_isomorph: num("pruned_isomorph")?,
            },
            graphs_examined: num("graphs_examined")?,
            search_space: get("search_space")?.clone(),
            engine_version: get("engine_version")?.clone(),
        },
    })
}
