//! Exact cover by dancing links, choosing the item with fewest options.

pub(crate) enum DlxOutcome {
    Solved(Vec<usize>),
    Exhausted,
    Aborted,
}

pub(crate) struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    items: usize,
}

impl Dlx {
    /// Node 0 is the root, nodes `1..=items` are item headers.
    pub(crate) fn new(items: usize, options: &[Vec<usize>]) -> Self {
        let total = 1 + items + options.iter().map(Vec::len).sum::<usize>();
        let mut d = Dlx {
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            column: Vec::with_capacity(total),
            row: Vec::with_capacity(total),
            size: vec![0; items + 1],
            items,
        };
        for h in 0..=items {
            d.left.push(if h == 0 { items } else { h - 1 });
            d.right.push(if h == items { 0 } else { h + 1 });
            d.up.push(h);
            d.down.push(h);
            d.column.push(h);
            d.row.push(usize::MAX);
        }
        for (r, opt) in options.iter().enumerate() {
            let first = d.left.len();
            for (k, &item) in opt.iter().enumerate() {
                let c = item + 1;
                let x = d.left.len();
                d.left.push(if k == 0 { x } else { x - 1 });
                d.right.push(first);
                if k > 0 {
                    d.right[x - 1] = x;
                    d.left[first] = x;
                }
                let last = d.up[c];
                d.up.push(last);
                d.down.push(c);
                d.down[last] = x;
                d.up[c] = x;
                d.column.push(c);
                d.row.push(r);
                d.size[c] += 1;
            }
        }
        d
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.column[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// First exact cover found; `tick` is called once per search node and
    /// aborts the search by returning `false`.
    pub(crate) fn solve(&mut self, tick: &mut dyn FnMut() -> bool) -> DlxOutcome {
        let mut chosen = Vec::with_capacity(self.items);
        match self.rec(&mut chosen, tick) {
            Some(true) => DlxOutcome::Solved(chosen.iter().map(|&x| self.row[x]).collect()),
            Some(false) => DlxOutcome::Exhausted,
            None => DlxOutcome::Aborted,
        }
    }

    fn rec(&mut self, chosen: &mut Vec<usize>, tick: &mut dyn FnMut() -> bool) -> Option<bool> {
        if !tick() {
            return None;
        }
        if self.right[0] == 0 {
            return Some(true);
        }
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 && self.size[best] > 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return Some(false);
        }
        self.cover(best);
        let mut r = self.down[best];
        while r != best {
            chosen.push(r);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            let res = self.rec(chosen, tick);
            if res != Some(false) {
                return res;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            chosen.pop();
            r = self.down[r];
        }
        self.uncover(best);
        Some(false)
    }
}
