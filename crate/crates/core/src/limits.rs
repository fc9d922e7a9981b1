/// Resource caps shared by constructions and searches.
///
/// Every operation that can blow up (ball enumeration, lifted pattern
/// generation, local-map tables, backtracking) checks one of these before
/// allocating and fails with [`crate::Error::ResourceCap`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cells in a ball, box or torus window.
    pub max_cells: usize,
    /// Symbols in a constructed alphabet.
    pub max_alphabet: usize,
    /// Forbidden patterns produced by a construction, or patterns returned
    /// by an enumeration.
    pub max_patterns: usize,
    /// Rows of a generated local-map table.
    pub max_table_rows: usize,
    /// Symbol trials made by a single search.
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cells: 4096,
            max_alphabet: 4096,
            max_patterns: 2_000_000,
            max_table_rows: 1_000_000,
            max_nodes: 200_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_cells(mut self, max_cells: usize) -> Self {
        self.max_cells = max_cells;
        self
    }
}
