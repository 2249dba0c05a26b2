//! Standard and semistandard Young tableaux and the bijections between
//! involutions, tableaux, lattice words, biwords, and gap compositions.
//!
//! Semistandard tableaux here are *row-strict*: entries strictly increase
//! along rows and weakly increase down columns. This is the transpose of the
//! more common column-strict convention; every count and identity in this
//! crate assumes it, and the classical picture is recovered by conjugation.
//! Rows and columns are 1-based in all positional APIs.

use std::fmt;

use crate::words::{weak_descent_set, Involution, Word, YamanouchiWord};
use crate::{Error, OracleBounds, Result};

/// A partition shape: weakly decreasing positive part lengths. The empty
/// shape is legal and denotes the empty tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of n as shapes, parts listed largest-first, generated in
/// decreasing lexicographic order: (n), (n-1,1), ..., (1,...,1).
pub fn partitions_of(n: usize) -> Vec<Shape> {
    fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape(cur.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

fn row_lengths_valid(rows: &[Vec<u32>]) -> bool {
    rows.iter().all(|r| !r.is_empty())
        && rows.windows(2).all(|w| w[0].len() >= w[1].len())
}

/// A standard Young tableau: the entries are exactly 1..n, rows strictly
/// increase left-to-right and columns strictly increase top-to-bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if !row_lengths_valid(&rows) {
            return Err(Error::InvalidTableau(
                "row lengths must be positive and weakly decreasing".into(),
            ));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &v in row {
                if v == 0 || v as usize > n || seen[v as usize - 1] {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be exactly 1..{n}, each once"
                    )));
                }
                seen[v as usize - 1] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("rows must strictly increase".into()));
            }
        }
        for r in 1..rows.len() {
            for (above, below) in rows[r - 1].iter().zip(&rows[r]) {
                if above >= below {
                    return Err(Error::InvalidTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

/// A row-strict semistandard Young tableau with entries in [1, symbol_bound].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    rows: Vec<Vec<u32>>,
    symbol_bound: u32,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u32>>, symbol_bound: u32) -> Result<Self> {
        if !row_lengths_valid(&rows) {
            return Err(Error::InvalidTableau(
                "row lengths must be positive and weakly decreasing".into(),
            ));
        }
        for row in &rows {
            for &v in row {
                if v == 0 || v > symbol_bound {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} outside [1, {symbol_bound}]"
                    )));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("rows must strictly increase".into()));
            }
        }
        for r in 1..rows.len() {
            for (above, below) in rows[r - 1].iter().zip(&rows[r]) {
                if above > below {
                    return Err(Error::InvalidTableau(
                        "columns must weakly increase".into(),
                    ));
                }
            }
        }
        Ok(SemistandardTableau { rows, symbol_bound })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn symbol_bound(&self) -> u32 {
        self.symbol_bound
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Content vector: entry i-1 counts the cells holding symbol i, for
    /// i in 1..=symbol_bound.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.symbol_bound as usize];
        for row in &self.rows {
            for &v in row {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

fn fmt_rows(rows: &[Vec<u32>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if rows.is_empty() {
        return write!(f, "(empty)");
    }
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        let parts: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))?;
    }
    Ok(())
}

/// A biword (w, y): the weakly increasing content word w paired with the
/// lattice row-index word y, with w strictly increasing across every weak
/// descent of y and all letters of w bounded by symbol_bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biword {
    w: Word,
    y: YamanouchiWord,
    symbol_bound: u32,
}

impl Biword {
    pub fn new(w: Word, y: YamanouchiWord, symbol_bound: u32) -> Result<Self> {
        if w.len() != y.len() {
            return Err(Error::InvalidBiword(format!(
                "length mismatch: |w| = {}, |y| = {}",
                w.len(),
                y.len()
            )));
        }
        let letters = w.letters();
        if letters.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::InvalidBiword("w must be weakly increasing".into()));
        }
        if letters.iter().any(|&c| c > symbol_bound) {
            return Err(Error::InvalidBiword(format!(
                "letter of w exceeds symbol bound {symbol_bound}"
            )));
        }
        for i in weak_descent_set(y.word()) {
            if letters[i - 1] >= letters[i] {
                return Err(Error::InvalidBiword(format!(
                    "w must be strict at descent position {i} of y"
                )));
            }
        }
        Ok(Biword { w, y, symbol_bound })
    }

    pub fn content_word(&self) -> &Word {
        &self.w
    }

    pub fn row_word(&self) -> &YamanouchiWord {
        &self.y
    }

    pub fn symbol_bound(&self) -> u32 {
        self.symbol_bound
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

/// A composition: an ordered sequence of nonnegative components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(components: Vec<u32>) -> Self {
        Composition(components)
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The row-index word of a standard tableau: position i holds the row
/// (1-based, top row = 1) of the cell containing i. The result is always a
/// reverse Yamanouchi word, and the map is a bijection onto them.
pub fn chi(t: &StandardTableau) -> YamanouchiWord {
    let n = t.size();
    let mut letters = vec![0u32; n];
    for (r, row) in t.rows().iter().enumerate() {
        for &v in row {
            letters[v as usize - 1] = r as u32 + 1;
        }
    }
    YamanouchiWord::from_letters(letters)
        .expect("row-index word of a standard tableau is a lattice word")
}

/// Inverse of [`chi`]: append symbol i to the end of row y_i, for i = 1..n.
/// Lattice validity of y guarantees the result is standard.
pub fn chi_inverse(y: &YamanouchiWord) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (i, &r) in y.letters().iter().enumerate() {
        let r = r as usize;
        if rows.len() < r {
            rows.resize(r, Vec::new());
        }
        rows[r - 1].push(i as u32 + 1);
    }
    StandardTableau::new(rows).expect("row placement of a lattice word is standard")
}

/// Transpose rows and columns. Satisfies
/// `chi(conjugate_tableau(t)) == conjugate_word(chi(t))`.
pub fn conjugate_tableau(t: &StandardTableau) -> StandardTableau {
    let rows = t.rows();
    let cols = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<u32>> = vec![Vec::new(); cols];
    for row in rows {
        for (c, &v) in row.iter().enumerate() {
            out[c].push(v);
        }
    }
    StandardTableau::new(out).expect("transpose of a standard tableau is standard")
}

/// The Robinson–Schensted insertion tableau of an involution, by Schensted
/// row insertion. For involutions the insertion and recording tableaux
/// coincide, so the insertion tableau alone determines the involution, and
/// the map is a bijection onto standard tableaux with n cells.
pub fn rs_tableau(sigma: &Involution) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in sigma.one_line() {
        let mut v = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![v]);
                break;
            }
            let pos = rows[r].partition_point(|&e| e < v);
            if pos == rows[r].len() {
                rows[r].push(v);
                break;
            }
            std::mem::swap(&mut v, &mut rows[r][pos]);
            r += 1;
        }
    }
    StandardTableau::new(rows).expect("insertion tableau of an involution is standard")
}

/// The composition chi ∘ rs_tableau: a bijection from involutions of [n]
/// onto reverse Yamanouchi words of length n that complements the descent
/// count, d(phi(sigma)) = (n-1) - d(sigma).
pub fn phi(sigma: &Involution) -> YamanouchiWord {
    chi(&rs_tableau(sigma))
}

/// Encodes a semistandard tableau as a biword: w lists all entries in
/// non-decreasing order; y lists, symbol by symbol from the smallest, the
/// row indices of that symbol's occurrences in increasing order.
pub fn ssyt_to_biword(t: &SemistandardTableau) -> Biword {
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(t.size());
    for (r, row) in t.rows().iter().enumerate() {
        for &v in row {
            pairs.push((v, r as u32 + 1));
        }
    }
    pairs.sort_unstable();
    let (w, y): (Vec<u32>, Vec<u32>) = pairs.into_iter().unzip();
    let w = Word::new(w).expect("tableau entries are positive");
    let y = YamanouchiWord::from_letters(y)
        .expect("row-index listing of a semistandard tableau is a lattice word");
    Biword::new(w, y, t.symbol_bound())
        .expect("a valid semistandard tableau encodes a valid biword")
}

/// Decodes a biword by placing w_i at the end of row y_i, in order.
/// The biword invariants guarantee a valid row-strict tableau, and the map
/// inverts [`ssyt_to_biword`].
pub fn biword_to_ssyt(b: &Biword) -> SemistandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (&v, &r) in b.content_word().letters().iter().zip(b.row_word().letters()) {
        let r = r as usize;
        if rows.len() < r {
            rows.resize(r, Vec::new());
        }
        rows[r - 1].push(v);
    }
    SemistandardTableau::new(rows, b.symbol_bound())
        .expect("biword invariants guarantee a row-strict tableau")
}

/// The gap sequence of a biword: components delta_0..delta_n with
/// delta_0 = w_1 - 1, delta_i = w_{i+1} - w_i, delta_n = s - w_n. The
/// components sum to s - 1 and delta_i >= 1 at every weak descent i of y.
///
/// The one degenerate corner is the empty biword with symbol bound 0, whose
/// gap sequence would have to be a composition of -1; that corner is
/// rejected.
pub fn delta_encoding(b: &Biword) -> Result<Composition> {
    let s = b.symbol_bound();
    let w = b.content_word().letters();
    if w.is_empty() {
        if s == 0 {
            return Err(Error::InvalidComposition(
                "empty biword with symbol bound 0 has no gap sequence".into(),
            ));
        }
        return Ok(Composition(vec![s - 1]));
    }
    let mut comps = Vec::with_capacity(w.len() + 1);
    comps.push(w[0] - 1);
    for i in 1..w.len() {
        comps.push(w[i] - w[i - 1]);
    }
    comps.push(s - w[w.len() - 1]);
    Ok(Composition(comps))
}

/// Subtracts 1 from every component sitting at a descent position. The
/// positions index components directly (descent at position i constrains
/// component delta_i); rejects any position where the component is already 0.
pub fn delta_prime(delta: &Composition, descents: &[usize]) -> Result<Composition> {
    let mut comps = delta.components().to_vec();
    for &i in descents {
        if i >= comps.len() {
            return Err(Error::InvalidComposition(format!(
                "descent position {i} outside composition of length {}",
                comps.len()
            )));
        }
        if comps[i] == 0 {
            return Err(Error::InvalidComposition(format!(
                "component at descent position {i} is already zero"
            )));
        }
        comps[i] -= 1;
    }
    Ok(Composition(comps))
}

/// Rebuilds the unique semistandard tableau with row word y and reduced gap
/// sequence delta_prime over s symbols: restores delta by adding 1 at each
/// descent of y, integrates the gaps back into w, and decodes the biword.
/// Requires |delta_prime| = |y| + 1 and sum(delta_prime) = s - d(y) - 1.
pub fn ssyt_from_word_and_composition(
    y: &YamanouchiWord,
    delta_prime: &Composition,
    s: u32,
) -> Result<SemistandardTableau> {
    let n = y.len();
    if delta_prime.len() != n + 1 {
        return Err(Error::InvalidComposition(format!(
            "expected {} components, got {}",
            n + 1,
            delta_prime.len()
        )));
    }
    let descents = weak_descent_set(y.word());
    let k = descents.len() as u64;
    if k + 1 > s as u64 || delta_prime.sum() != s as u64 - k - 1 {
        return Err(Error::InvalidComposition(format!(
            "components must sum to s - d(y) - 1 = {} - {} - 1",
            s,
            k
        )));
    }
    let mut delta = delta_prime.components().to_vec();
    for &i in &descents {
        delta[i] += 1;
    }
    if n == 0 {
        let b = Biword::new(
            Word::new(Vec::new()).unwrap(),
            y.clone(),
            s,
        )?;
        return Ok(biword_to_ssyt(&b));
    }
    let mut w = Vec::with_capacity(n);
    let mut cur = delta[0] + 1;
    w.push(cur);
    for d in delta.iter().take(n).skip(1) {
        cur += d;
        w.push(cur);
    }
    debug_assert_eq!(delta[n], s - cur, "gap components must integrate to s");
    let b = Biword::new(Word::new(w)?, y.clone(), s)?;
    Ok(biword_to_ssyt(&b))
}

/// Streams every row-strict semistandard tableau with `cells` cells and
/// symbols in [1, symbols], shape by shape (partitions in decreasing
/// lexicographic order, fillings in lexicographic order).
pub fn enumerate_ssyt(
    cells: usize,
    symbols: usize,
    bounds: &OracleBounds,
) -> Result<SsytStream> {
    OracleBounds::check("ssyt cell count", cells, bounds.ssyt_cells)?;
    OracleBounds::check("ssyt symbol bound", symbols, bounds.ssyt_symbols)?;
    Ok(SsytStream {
        shapes: partitions_of(cells),
        next_shape: 0,
        current: None,
        symbols: symbols as u32,
    })
}

/// Streams the row-strict fillings of one fixed shape with symbols in
/// [1, symbols]. Bounded at symfunc scale.
pub fn enumerate_ssyt_of_shape(
    shape: &Shape,
    symbols: usize,
    bounds: &OracleBounds,
) -> Result<ShapeFillings> {
    OracleBounds::check("shape cell count", shape.size(), bounds.shape_cells)?;
    OracleBounds::check("shape symbol bound", symbols, bounds.shape_symbols)?;
    Ok(ShapeFillings::new(shape.parts().to_vec(), symbols as u32))
}

/// Lazy stream over all shapes of a fixed cell count.
pub struct SsytStream {
    shapes: Vec<Shape>,
    next_shape: usize,
    current: Option<ShapeFillings>,
    symbols: u32,
}

impl Iterator for SsytStream {
    type Item = SemistandardTableau;

    fn next(&mut self) -> Option<SemistandardTableau> {
        loop {
            if let Some(f) = &mut self.current {
                if let Some(t) = f.next() {
                    return Some(t);
                }
            }
            if self.next_shape == self.shapes.len() {
                return None;
            }
            let shape = self.shapes[self.next_shape].parts().to_vec();
            self.next_shape += 1;
            self.current = Some(ShapeFillings::new(shape, self.symbols));
        }
    }
}

/// Backtracking stream of the row-strict fillings of one shape, in
/// lexicographic order of the row-major reading.
pub struct ShapeFillings {
    shape: Vec<usize>,
    symbols: u32,
    /// row-major (row, col) cell list
    cells: Vec<(usize, usize)>,
    /// index of the first cell of each row within `cells`
    row_starts: Vec<usize>,
    /// current partial filling, parallel to `cells`
    values: Vec<u32>,
    state: FillState,
}

enum FillState {
    Fresh,
    Mid,
    Done,
}

impl ShapeFillings {
    fn new(shape: Vec<usize>, symbols: u32) -> Self {
        let mut cells = Vec::with_capacity(shape.iter().sum());
        let mut row_starts = Vec::with_capacity(shape.len());
        for (r, &len) in shape.iter().enumerate() {
            row_starts.push(cells.len());
            for c in 0..len {
                cells.push((r, c));
            }
        }
        ShapeFillings {
            shape,
            symbols,
            cells,
            row_starts,
            values: Vec::new(),
            state: FillState::Fresh,
        }
    }

    fn value_at(&self, r: usize, c: usize) -> u32 {
        self.values[self.row_starts[r] + c]
    }

    /// Smallest value admissible at cell `idx` given the prefix: exceeds the
    /// left neighbor strictly, dominates the upper neighbor weakly.
    fn lower_bound(&self, idx: usize) -> u32 {
        let (r, c) = self.cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(self.value_at(r, c - 1) + 1);
        }
        if r > 0 {
            lo = lo.max(self.value_at(r - 1, c));
        }
        lo
    }

    /// Greedily extends the filling with minimal values from `from` on;
    /// fails exactly when the current prefix admits no completion.
    fn refill_from(&mut self, from: usize) -> bool {
        self.values.truncate(from);
        for idx in from..self.cells.len() {
            let lo = self.lower_bound(idx);
            if lo > self.symbols {
                return false;
            }
            self.values.push(lo);
        }
        true
    }

    /// Lexicographic successor. Raising a cell only tightens the bounds of
    /// everything after it, so each cell needs at most one raise attempt.
    fn advance(&mut self) -> bool {
        let mut idx = self.cells.len();
        while idx > 0 {
            idx -= 1;
            if self.values[idx] < self.symbols {
                self.values[idx] += 1;
                self.values.truncate(idx + 1);
                if self.refill_from(idx + 1) {
                    return true;
                }
                self.values.truncate(idx + 1);
            }
        }
        false
    }

    fn emit(&self) -> SemistandardTableau {
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.shape.len());
        for (r, &len) in self.shape.iter().enumerate() {
            let start = self.row_starts[r];
            rows.push(self.values[start..start + len].to_vec());
        }
        debug_assert!(SemistandardTableau::new(rows.clone(), self.symbols).is_ok());
        SemistandardTableau {
            rows,
            symbol_bound: self.symbols,
        }
    }
}

impl Iterator for ShapeFillings {
    type Item = SemistandardTableau;

    fn next(&mut self) -> Option<SemistandardTableau> {
        match self.state {
            FillState::Fresh => {
                self.state = FillState::Mid;
                if self.refill_from(0) {
                    Some(self.emit())
                } else {
                    self.state = FillState::Done;
                    None
                }
            }
            FillState::Mid => {
                if self.advance() {
                    Some(self.emit())
                } else {
                    self.state = FillState::Done;
                    None
                }
            }
            FillState::Done => None,
        }
    }
}

/// All standard tableaux of the given shape, built by placing 1..n at the
/// feasible row ends.
pub fn enumerate_standard(shape: &Shape, bounds: &OracleBounds) -> Result<Vec<StandardTableau>> {
    OracleBounds::check("standard tableau cells", shape.size(), bounds.standard_cells)?;
    let parts = shape.parts();
    let n = shape.size();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();

    fn rec(
        next: u32,
        n: usize,
        parts: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next as usize > n {
            out.push(StandardTableau {
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..parts.len() {
            let feasible = rows[r].len() < parts[r]
                && (r == 0 || rows[r - 1].len() > rows[r].len());
            if feasible {
                rows[r].push(next);
                rec(next + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
    }

    rec(1, n, parts, &mut rows, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yam(letters: &[u32]) -> YamanouchiWord {
        YamanouchiWord::from_letters(letters.to_vec()).unwrap()
    }

    fn std_t(rows: &[&[u32]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ssyt(rows: &[&[u32]], s: u32) -> SemistandardTableau {
        SemistandardTableau::new(rows.iter().map(|r| r.to_vec()).collect(), s).unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![3, 3, 2]).is_ok());
        assert!(Shape::new(vec![2, 3]).is_err());
        assert!(Shape::new(vec![1, 0]).is_err());
        assert!(Shape::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn chi_examples() {
        let t = std_t(&[&[1, 3, 5], &[2, 6, 7], &[4, 8]]);
        assert_eq!(chi(&t), yam(&[1, 2, 1, 3, 1, 2, 2, 3]));
        assert_eq!(chi(&std_t(&[&[1, 2, 3, 4]])), yam(&[1, 1, 1, 1]));
        assert_eq!(chi(&std_t(&[&[1], &[2], &[3]])), yam(&[1, 2, 3]));
    }

    #[test]
    fn chi_inverse_examples() {
        let t = std_t(&[&[1, 3, 5], &[2, 6, 7], &[4, 8]]);
        assert_eq!(chi_inverse(&yam(&[1, 2, 1, 3, 1, 2, 2, 3])), t);
        assert_eq!(chi_inverse(&yam(&[1, 1, 1])), std_t(&[&[1, 2, 3]]));
        assert_eq!(chi_inverse(&yam(&[1, 2, 1])), std_t(&[&[1, 3], &[2]]));
    }

    #[test]
    fn conjugate_examples() {
        let t = std_t(&[&[1, 3, 5], &[2, 6, 7], &[4, 8]]);
        let tc = std_t(&[&[1, 2, 4], &[3, 6, 8], &[5, 7]]);
        assert_eq!(conjugate_tableau(&t), tc);
        assert_eq!(
            conjugate_tableau(&std_t(&[&[1, 2, 3]])),
            std_t(&[&[1], &[2], &[3]])
        );
        assert_eq!(
            conjugate_tableau(&std_t(&[&[1, 2], &[3, 4]])),
            std_t(&[&[1, 3], &[2, 4]])
        );
    }

    #[test]
    fn rs_examples() {
        let s = Involution::new(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(rs_tableau(&s), std_t(&[&[1, 2], &[3, 4]]));
        assert_eq!(
            rs_tableau(&Involution::identity(4)),
            std_t(&[&[1, 2, 3, 4]])
        );
        let rev = Involution::new(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(rs_tableau(&rev), std_t(&[&[1], &[2], &[3], &[4]]));
    }

    #[test]
    fn phi_examples() {
        let s = Involution::new(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(phi(&s), yam(&[1, 1, 2, 2]));
        assert_eq!(phi(&Involution::identity(3)), yam(&[1, 1, 1]));
        let rev = Involution::new(vec![3, 2, 1]).unwrap();
        assert_eq!(phi(&rev), yam(&[1, 2, 3]));
    }

    #[test]
    fn biword_examples() {
        let t = ssyt(&[&[1, 2, 3], &[2, 3], &[4], &[5]], 5);
        let b = ssyt_to_biword(&t);
        assert_eq!(b.content_word().letters(), &[1, 2, 2, 3, 3, 4, 5]);
        assert_eq!(b.row_word().letters(), &[1, 1, 2, 1, 2, 3, 4]);
        assert_eq!(biword_to_ssyt(&b), t);

        let empty = ssyt(&[], 3);
        assert!(ssyt_to_biword(&empty).is_empty());

        let cell = ssyt(&[&[3]], 4);
        let bc = ssyt_to_biword(&cell);
        assert_eq!(bc.content_word().letters(), &[3]);
        assert_eq!(bc.row_word().letters(), &[1]);

        // weak column repeat is legal
        let col = Biword::new(
            Word::new(vec![1, 1]).unwrap(),
            yam(&[1, 2]),
            1,
        )
        .unwrap();
        assert_eq!(biword_to_ssyt(&col), ssyt(&[&[1], &[1]], 1));
    }

    #[test]
    fn biword_validation() {
        // descent of y at 1 forces w strict there
        assert!(Biword::new(Word::new(vec![2, 2]).unwrap(), yam(&[1, 1]), 3).is_err());
        assert!(Biword::new(Word::new(vec![2, 1]).unwrap(), yam(&[1, 2]), 3).is_err());
        assert!(Biword::new(Word::new(vec![1, 4]).unwrap(), yam(&[1, 2]), 3).is_err());
        assert!(Biword::new(Word::new(vec![1]).unwrap(), yam(&[1, 1]), 3).is_err());
    }

    #[test]
    fn delta_examples() {
        let t = ssyt(&[&[1, 2, 3], &[2, 3], &[4], &[5]], 5);
        let b = ssyt_to_biword(&t);
        let d = delta_encoding(&b).unwrap();
        assert_eq!(d.components(), &[0, 1, 0, 1, 0, 1, 1, 0]);
        assert_eq!(d.sum(), 4); // s - 1

        let cell = ssyt(&[&[1]], 1);
        assert_eq!(
            delta_encoding(&ssyt_to_biword(&cell)).unwrap().components(),
            &[0, 0]
        );

        let b3 = Biword::new(Word::new(vec![1, 2, 3]).unwrap(), yam(&[1, 1, 1]), 3).unwrap();
        assert_eq!(
            delta_encoding(&b3).unwrap().components(),
            &[0, 1, 1, 0]
        );

        // the one corner with no gap sequence
        let empty0 = Biword::new(Word::new(vec![]).unwrap(), yam(&[]), 0).unwrap();
        assert!(delta_encoding(&empty0).is_err());
    }

    #[test]
    fn delta_prime_examples() {
        let d = Composition::new(vec![0, 1, 0, 1, 0, 1, 1, 0]);
        let dp = delta_prime(&d, &[1, 3]).unwrap();
        assert_eq!(dp.components(), &[0, 0, 0, 0, 0, 1, 1, 0]);
        assert_eq!(dp.sum(), 2); // s - k - 1 = 5 - 2 - 1

        assert_eq!(delta_prime(&d, &[]).unwrap(), d);
        assert_eq!(
            delta_prime(&Composition::new(vec![0, 1]), &[1])
                .unwrap()
                .components(),
            &[0, 0]
        );
        assert!(delta_prime(&Composition::new(vec![0, 0]), &[1]).is_err());
    }

    #[test]
    fn rebuild_examples() {
        let y = yam(&[1, 1, 2, 1, 2, 3, 4]);
        let dp = Composition::new(vec![0, 0, 0, 0, 0, 1, 1, 0]);
        let t = ssyt_from_word_and_composition(&y, &dp, 5).unwrap();
        assert_eq!(t, ssyt(&[&[1, 2, 3], &[2, 3], &[4], &[5]], 5));

        let single = ssyt_from_word_and_composition(&yam(&[1]), &Composition::new(vec![0, 0]), 1)
            .unwrap();
        assert_eq!(single, ssyt(&[&[1]], 1));

        // y = 1 1 places both cells in row 1; its descent forces w = 1 2
        let two = ssyt_from_word_and_composition(
            &yam(&[1, 1]),
            &Composition::new(vec![0, 0, 0]),
            2,
        )
        .unwrap();
        assert_eq!(two, ssyt(&[&[1, 2]], 2));

        // mismatched length and sum are rejected
        assert!(
            ssyt_from_word_and_composition(&yam(&[1]), &Composition::new(vec![0]), 1).is_err()
        );
        assert!(
            ssyt_from_word_and_composition(&yam(&[1]), &Composition::new(vec![1, 1]), 1).is_err()
        );
    }

    #[test]
    fn ssyt_enumeration_counts() {
        let bounds = OracleBounds::default();
        assert_eq!(enumerate_ssyt(1, 3, &bounds).unwrap().count(), 3);
        assert_eq!(enumerate_ssyt(2, 2, &bounds).unwrap().count(), 4);
        assert_eq!(enumerate_ssyt(2, 1, &bounds).unwrap().count(), 1);
        assert_eq!(enumerate_ssyt(0, 0, &bounds).unwrap().count(), 1);
        assert_eq!(enumerate_ssyt(3, 0, &bounds).unwrap().count(), 0);
        assert!(enumerate_ssyt(9, 2, &bounds).is_err());
    }

    #[test]
    fn ssyt_two_cells_two_symbols() {
        let bounds = OracleBounds::default();
        let all: Vec<SemistandardTableau> = enumerate_ssyt(2, 2, &bounds).unwrap().collect();
        let expect = vec![
            ssyt(&[&[1, 2]], 2),
            ssyt(&[&[1], &[1]], 2),
            ssyt(&[&[1], &[2]], 2),
            ssyt(&[&[2], &[2]], 2),
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn standard_enumeration_counts() {
        let bounds = OracleBounds::default();
        let s21 = Shape::new(vec![2, 1]).unwrap();
        assert_eq!(enumerate_standard(&s21, &bounds).unwrap().len(), 2);
        let row = Shape::new(vec![5]).unwrap();
        assert_eq!(enumerate_standard(&row, &bounds).unwrap().len(), 1);
        let s22 = Shape::new(vec![2, 2]).unwrap();
        assert_eq!(enumerate_standard(&s22, &bounds).unwrap().len(), 2);
        assert!(enumerate_standard(&Shape::new(vec![9]).unwrap(), &bounds).is_err());
    }

    #[test]
    fn shape_fillings_examples() {
        let bounds = OracleBounds::default();
        let s21 = Shape::new(vec![2, 1]).unwrap();
        let fills: Vec<SemistandardTableau> =
            enumerate_ssyt_of_shape(&s21, 2, &bounds).unwrap().collect();
        assert_eq!(
            fills,
            vec![ssyt(&[&[1, 2], &[1]], 2), ssyt(&[&[1, 2], &[2]], 2)]
        );

        let one = Shape::new(vec![1]).unwrap();
        assert_eq!(enumerate_ssyt_of_shape(&one, 4, &bounds).unwrap().count(), 4);

        let two = Shape::new(vec![2]).unwrap();
        let fills: Vec<SemistandardTableau> =
            enumerate_ssyt_of_shape(&two, 2, &bounds).unwrap().collect();
        assert_eq!(fills, vec![ssyt(&[&[1, 2]], 2)]);
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        let four: Vec<Vec<usize>> = partitions_of(4)
            .iter()
            .map(|s| s.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1, 1]], 2).is_err()); // row weak
        assert!(SemistandardTableau::new(vec![vec![1], vec![1]], 2).is_ok()); // column weak
        assert!(SemistandardTableau::new(vec![vec![3]], 2).is_err()); // over bound
        assert!(SemistandardTableau::new(vec![vec![2], vec![1]], 2).is_err());
    }
}
