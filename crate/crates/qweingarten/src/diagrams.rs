//! Non-crossing pair partitions, their two-colored variant, and loop
//! combinatorics.
//!
//! A Temperley-Lieb diagram with `k` strings is stored in Frobenius form: a
//! fixed-point-free involution of the points `1..=2k` whose strings never
//! cross. The set of all such [`Pairing`]s has Catalan-number size `C_k` and
//! indexes the Gram and Weingarten matrices built downstream.
//!
//! Superimposing two pairings of the same size closes every string into a
//! loop; [`loop_count`] counts those loops and [`loop_distance`] turns the
//! count into the metric `d(p, q) = k - l(p, q)` that drives the `1/n`
//! expansion machinery.

use std::fmt;

use thiserror::Error;

/// Default cap on the half-size accepted by the enumerators.
///
/// `C_10 = 16796` diagrams already means a 16796-dimensional Gram matrix
/// downstream; anything larger should be a deliberate choice made through
/// the `_with_limit` variants.
pub const DEFAULT_MAX_HALF_SIZE: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("pairings have different sizes: {left} vs {right} points")]
    SizeMismatch { left: usize, right: usize },
    #[error("index has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("half-size {half_size} exceeds the enumeration limit {limit}")]
    HalfSizeLimit { half_size: usize, limit: usize },
    #[error("partner array has odd length {0}")]
    OddLength(usize),
    #[error("point {0} is paired with itself")]
    FixedPoint(usize),
    #[error("partner array is not an involution at point {0}")]
    NotInvolution(usize),
    #[error("point {0} is out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("strings ({0},{2}) and ({1},{3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("invalid color letter {0:?}, expected 'a' or 'b'")]
    InvalidColor(char),
}

/// One of the two letters indexing unitary-case monomials: `Alpha` stands
/// for the generator itself, `Beta` for its adjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Alpha,
    Beta,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Alpha => Color::Beta,
            Color::Beta => Color::Alpha,
        }
    }

    /// Command-line / file spelling: `a` for Alpha, `b` for Beta.
    pub fn as_char(self) -> char {
        match self {
            Color::Alpha => 'a',
            Color::Beta => 'b',
        }
    }
}

/// A word over the two-letter alphabet, indexing unitary monomials and the
/// colored diagram sets. The empty word is allowed and represents the
/// trivial object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorWord {
    letters: Vec<Color>,
}

impl ColorWord {
    pub fn new(letters: Vec<Color>) -> Self {
        ColorWord { letters }
    }

    /// The alternating word `(alpha beta)^k`.
    pub fn alternating(k: usize) -> Self {
        let letters = (0..2 * k)
            .map(|i| if i % 2 == 0 { Color::Alpha } else { Color::Beta })
            .collect();
        ColorWord { letters }
    }

    /// The all-alpha word of the given length, used for orthogonal
    /// monomials where every letter is self-adjoint.
    pub fn all_alpha(len: usize) -> Self {
        ColorWord {
            letters: vec![Color::Alpha; len],
        }
    }

    /// Parse from the letter spelling, e.g. `"abab"`.
    pub fn parse(s: &str) -> Result<Self, DiagramError> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'a' => letters.push(Color::Alpha),
                'b' => letters.push(Color::Beta),
                other => return Err(DiagramError::InvalidColor(other)),
            }
        }
        Ok(ColorWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Color] {
        &self.letters
    }

    pub fn letter(&self, position: usize) -> Color {
        self.letters[position]
    }

    /// A word is balanced when it has as many alpha as beta letters; only
    /// balanced words admit colored pairings.
    pub fn is_balanced(&self) -> bool {
        let alpha = self.letters.iter().filter(|c| **c == Color::Alpha).count();
        2 * alpha == self.letters.len()
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ColorWord {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ColorWord::parse(s)
    }
}

/// A multi-index `(i_1, ..., i_l)` with 1-based entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<u64>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u64>) -> Self {
        MultiIndex { entries }
    }

    /// The constant index `(value, value, ..., value)` of the given length.
    pub fn constant(len: usize, value: u64) -> Self {
        MultiIndex {
            entries: vec![value; len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at a 0-based position.
    pub fn entry(&self, position: usize) -> u64 {
        self.entries[position]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Checks that every entry lies in `1..=n`.
    pub fn check_range(&self, n: u64) -> Result<(), DiagramError> {
        for &e in &self.entries {
            if e < 1 || e > n {
                return Err(DiagramError::PointOutOfRange(e as usize, n as usize));
            }
        }
        Ok(())
    }

    /// Parse a comma-separated list of 1-based entries, e.g. `"1,2,2,1"`.
    /// The empty string is the empty index.
    pub fn parse(s: &str) -> Result<Self, std::num::ParseIntError> {
        if s.is_empty() {
            return Ok(MultiIndex::new(Vec::new()));
        }
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiIndex::new(entries))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A non-crossing pair partition of `2k` points in Frobenius form.
///
/// Internally the involution is stored 0-based: `partner[i]` is the point
/// matched with `i`. All external encodings (display, cache files, CLI
/// output) use 1-based partner arrays. The derived `Ord` is the canonical
/// enumeration order: ascending lexicographic on the partner array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// The unique pairing of zero points.
    pub fn empty() -> Self {
        Pairing { partner: Vec::new() }
    }

    /// Build from a 1-based partner array, validating all invariants:
    /// fixed-point-free involution, non-crossing, odd-to-even strings.
    pub fn from_partner_one_based(partner: &[usize]) -> Result<Self, DiagramError> {
        let len = partner.len();
        if len % 2 != 0 {
            return Err(DiagramError::OddLength(len));
        }
        let mut zero_based = vec![0usize; len];
        for (i, &p) in partner.iter().enumerate() {
            if p < 1 || p > len {
                return Err(DiagramError::PointOutOfRange(p, len));
            }
            zero_based[i] = p - 1;
        }
        let pairing = Pairing { partner: zero_based };
        pairing.validate()?;
        Ok(pairing)
    }

    /// Build from 1-based point pairs, e.g. `&[(1, 2), (3, 4)]`.
    pub fn from_pairs_one_based(len: usize, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let mut partner = vec![0usize; len];
        for &(a, b) in pairs {
            if a < 1 || a > len {
                return Err(DiagramError::PointOutOfRange(a, len));
            }
            if b < 1 || b > len {
                return Err(DiagramError::PointOutOfRange(b, len));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        Self::from_partner_one_based(&partner)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let len = self.partner.len();
        for i in 0..len {
            let p = self.partner[i];
            if p == i {
                return Err(DiagramError::FixedPoint(i + 1));
            }
            if self.partner[p] != i {
                return Err(DiagramError::NotInvolution(i + 1));
            }
            // Non-crossing forces strings to join opposite parities.
            if (i + p) % 2 == 0 {
                return Err(DiagramError::Crossing(i + 1, p + 1, i + 1, p + 1));
            }
        }
        for (a, c) in self.strings() {
            for (b, d) in self.strings() {
                if a < b && b < c && c < d {
                    return Err(DiagramError::Crossing(a + 1, b + 1, c + 1, d + 1));
                }
            }
        }
        Ok(())
    }

    /// Number of strings.
    pub fn half_size(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points, `2k`.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Partner of a 0-based point.
    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// The 1-based partner array, the canonical external encoding.
    pub fn partner_one_based(&self) -> Vec<usize> {
        self.partner.iter().map(|&p| p + 1).collect()
    }

    /// Iterator over strings as 0-based point pairs `(a, b)` with `a < b`,
    /// ascending in `a`.
    pub fn strings(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i < p)
            .map(|(i, &p)| (i, p))
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partner.iter().map(|&p| (p + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// All non-crossing pairings of `2k` points in canonical order (ascending
/// lexicographic on the partner array). There are exactly `C_k` of them;
/// `k = 0` yields the single empty pairing.
pub fn enumerate_pairings(k: usize) -> Result<Vec<Pairing>, DiagramError> {
    enumerate_pairings_with_limit(k, DEFAULT_MAX_HALF_SIZE)
}

/// [`enumerate_pairings`] with an explicit half-size cap.
pub fn enumerate_pairings_with_limit(k: usize, limit: usize) -> Result<Vec<Pairing>, DiagramError> {
    if k > limit {
        return Err(DiagramError::HalfSizeLimit {
            half_size: k,
            limit,
        });
    }
    Ok(generate(2 * k)
        .into_iter()
        .map(|partner| Pairing { partner })
        .collect())
}

/// All non-crossing pairings of the letters of `word` in which every string
/// joins an alpha to a beta, in canonical order. Unbalanced (in particular
/// odd-length) words have no such pairing and yield the empty list.
pub fn enumerate_colored_pairings(word: &ColorWord) -> Result<Vec<Pairing>, DiagramError> {
    enumerate_colored_pairings_with_limit(word, DEFAULT_MAX_HALF_SIZE)
}

/// [`enumerate_colored_pairings`] with an explicit half-size cap.
pub fn enumerate_colored_pairings_with_limit(
    word: &ColorWord,
    limit: usize,
) -> Result<Vec<Pairing>, DiagramError> {
    let half = word.len() / 2;
    if half > limit {
        return Err(DiagramError::HalfSizeLimit {
            half_size: half,
            limit,
        });
    }
    Ok(generate_colored(word.letters())
        .into_iter()
        .map(|partner| Pairing { partner })
        .collect())
}

/// Recursive first-point matching: point 0 pairs with an odd-offset point
/// `m`, splitting the rest into the enclosed and the trailing interval.
/// Ascending `m` with the enclosed interval as the outer loop yields
/// ascending lexicographic order on the partner arrays.
fn generate(len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in (1..len).step_by(2) {
        for inside in generate(m - 1) {
            for outside in generate(len - m - 1) {
                out.push(assemble(len, m, &inside, &outside));
            }
        }
    }
    out
}

fn generate_colored(colors: &[Color]) -> Vec<Vec<usize>> {
    if colors.is_empty() {
        return vec![Vec::new()];
    }
    let len = colors.len();
    let mut out = Vec::new();
    for m in (1..len).step_by(2) {
        if colors[m] == colors[0] {
            continue;
        }
        for inside in generate_colored(&colors[1..m]) {
            for outside in generate_colored(&colors[m + 1..]) {
                out.push(assemble(len, m, &inside, &outside));
            }
        }
    }
    out
}

fn assemble(len: usize, m: usize, inside: &[usize], outside: &[usize]) -> Vec<usize> {
    let mut partner = vec![0usize; len];
    partner[0] = m;
    partner[m] = 0;
    for (i, &p) in inside.iter().enumerate() {
        partner[1 + i] = 1 + p;
    }
    for (i, &p) in outside.iter().enumerate() {
        partner[m + 1 + i] = m + 1 + p;
    }
    partner
}

/// Number of loops obtained by superimposing `p` and `q`: the connected
/// components of the multigraph on the `2k` points whose edges are the
/// strings of both pairings. Computed by union-find.
pub fn loop_count(p: &Pairing, q: &Pairing) -> Result<usize, DiagramError> {
    if p.len() != q.len() {
        return Err(DiagramError::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let mut uf = UnionFind::new(p.len());
    for (a, b) in p.strings() {
        uf.union(a, b);
    }
    for (a, b) in q.strings() {
        uf.union(a, b);
    }
    Ok(uf.component_count())
}

/// The loop distance `d(p, q) = k - l(p, q)`, a metric on same-size
/// pairings.
pub fn loop_distance(p: &Pairing, q: &Pairing) -> Result<usize, DiagramError> {
    let loops = loop_count(p, q)?;
    Ok(p.half_size() - loops)
}

/// `true` iff every string of `p` joins two equal entries of `index`.
pub fn delta_symbol(p: &Pairing, index: &MultiIndex) -> Result<bool, DiagramError> {
    if p.len() != index.len() {
        return Err(DiagramError::LengthMismatch {
            expected: p.len(),
            found: index.len(),
        });
    }
    Ok(p.strings().all(|(a, b)| index.entry(a) == index.entry(b)))
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let mut rx = self.find(x);
        let mut ry = self.find(y);
        if rx == ry {
            return;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
    }

    fn component_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
