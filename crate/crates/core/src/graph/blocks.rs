use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Blocks (maximal nonseparable subgraphs) and cut vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Blocks holding exactly one cut vertex; zero for a nonseparable graph.
    pub end_block_count: usize,
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cuts = self.cuts.insert(v);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block = block.insert(a).insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

pub(super) fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.n() == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::EMPTY,
            end_block_count: 0,
        });
    }
    let mut t = Tarjan {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    t.visit(0, None);
    let mut blocks = t.blocks;
    blocks.sort();
    let cuts = t.cuts;
    let end_block_count = if cuts.is_empty() {
        0
    } else {
        blocks
            .iter()
            .filter(|b| b.intersection(cuts).len() == 1)
            .count()
    };
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: cuts,
        end_block_count,
    })
}
