//! Planarity testing by incremental face embedding of each biconnected block
//! (Demoucron, Malgrange and Pertuiset).

use std::collections::{BTreeSet, HashSet, VecDeque};

/// Whether the simple graph on `0..n` with these edges is planar.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(a, b) in edges {
        if a != b {
            set.insert((a.min(b), a.max(b)));
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &set {
        adj[a].push(b);
        adj[b].push(a);
    }
    blocks(&adj).iter().all(|b| block_is_planar(b))
}

/// Edge sets of the biconnected components.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Frames: (vertex, parent, next neighbor index).
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = frames.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(block: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if n < 5 || block.len() < 9 {
        return true;
    }
    if block.len() > 3 * n - 6 {
        return false;
    }
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in block {
        let (a, b) = (idx(a), idx(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    Embedder::new(adj).run()
}

struct Embedder {
    adj: Vec<Vec<usize>>,
    placed: Vec<bool>,
    placed_edges: HashSet<(usize, usize)>,
    /// Faces as vertex cycles.
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    attachments: Vec<usize>,
    /// A path through the fragment between two attachments.
    path: Vec<usize>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Embedder {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Embedder {
            adj,
            placed: vec![false; n],
            placed_edges: HashSet::new(),
            faces: Vec::new(),
        }
    }

    /// The cycle closed by the first non-tree edge of a BFS tree.
    fn initial_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut q = VecDeque::from([0]);
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    q.push_back(w);
                } else if w != parent[v] && parent[w] != v {
                    let mut up_v = vec![v];
                    while parent[*up_v.last().unwrap()] != usize::MAX {
                        up_v.push(parent[*up_v.last().unwrap()]);
                    }
                    let mut up_w = vec![w];
                    while !up_v.contains(up_w.last().unwrap()) {
                        up_w.push(parent[*up_w.last().unwrap()]);
                    }
                    let lca = *up_w.last().unwrap();
                    let mut cycle: Vec<usize> =
                        up_v.iter().copied().take_while(|&u| u != lca).collect();
                    cycle.push(lca);
                    cycle.extend(up_w.iter().rev().skip(1));
                    return cycle;
                }
            }
        }
        unreachable!("a block with at least five vertices has a cycle")
    }

    fn place_path(&mut self, path: &[usize]) {
        for &v in path {
            self.placed[v] = true;
        }
        for w in path.windows(2) {
            self.placed_edges.insert(key(w[0], w[1]));
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for v in 0..n {
            if !self.placed[v] {
                continue;
            }
            for &w in &self.adj[v] {
                if v < w && self.placed[w] && !self.placed_edges.contains(&key(v, w)) {
                    out.push(Fragment {
                        attachments: vec![v, w],
                        path: vec![v, w],
                    });
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        for start in 0..n {
            if self.placed[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = start;
            comp[start] = id;
            let mut q = VecDeque::from([start]);
            let mut attach = BTreeSet::new();
            while let Some(v) = q.pop_front() {
                for &w in &self.adj[v] {
                    if self.placed[w] {
                        attach.insert(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = id;
                        q.push_back(w);
                    }
                }
            }
            let attachments: Vec<usize> = attach.into_iter().collect();
            let path = self.fragment_path(&comp, id, &attachments);
            out.push(Fragment { attachments, path });
        }
        out
    }

    /// From the first attachment into the fragment and out to a different
    /// attachment.
    fn fragment_path(&self, comp: &[usize], id: usize, attachments: &[usize]) -> Vec<usize> {
        let a = attachments[0];
        let n = self.adj.len();
        let mut prev = vec![usize::MAX; n];
        let mut q = VecDeque::new();
        for &w in &self.adj[a] {
            if !self.placed[w] && comp[w] == id && prev[w] == usize::MAX {
                prev[w] = a;
                q.push_back(w);
            }
        }
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if self.placed[w] && w != a {
                    let mut path = vec![w, v];
                    let mut u = v;
                    while prev[u] != a {
                        u = prev[u];
                        path.push(u);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                if !self.placed[w] && prev[w] == usize::MAX {
                    prev[w] = v;
                    q.push_back(w);
                }
            }
        }
        unreachable!("fragments of a block have two attachments")
    }

    fn admissible(&self, frag: &Fragment) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| frag.attachments.iter().all(|v| self.faces[f].contains(v)))
            .collect()
    }

    /// Splits face `f` along `path`, whose two ends lie on it.
    fn split_face(&mut self, f: usize, path: &[usize]) {
        let face = std::mem::take(&mut self.faces[f]);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&v| v == a).unwrap();
        let ib = face.iter().position(|&v| v == b).unwrap();
        let m = face.len();
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % m;
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = arc(ia, ib);
        first.extend(interior.iter().rev());
        let mut second = arc(ib, ia);
        second.extend(interior.iter());
        self.faces[f] = first;
        self.faces.push(second);
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        let mut closed = cycle.clone();
        closed.push(cycle[0]);
        self.place_path(&closed);
        self.faces = vec![cycle.clone(), cycle];
        loop {
            let frags = self.fragments();
            if frags.is_empty() {
                return true;
            }
            let mut choice = None;
            for fr in &frags {
                let faces = self.admissible(fr);
                match faces.len() {
                    0 => return false,
                    1 => {
                        choice = Some((faces[0], fr.path.clone()));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((faces[0], fr.path.clone()));
                        }
                    }
                }
            }
            let (f, path) = choice.expect("some fragment");
            self.place_path(&path);
            self.split_face(f, &path);
        }
    }
}
