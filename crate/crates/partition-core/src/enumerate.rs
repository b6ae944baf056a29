use crate::{Multipartition, Partition};

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(cur.clone()).expect("generated parts are decreasing"));
        return;
    }
    for w in (1..=max.min(rest)).rev() {
        cur.push(w);
        fill(rest - w, w, cur, out);
        cur.pop();
    }
}

pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

/// All `level`-multipartitions of total size `n`.
pub fn multipartitions(n: u32, level: usize) -> Vec<Multipartition> {
    if level == 0 {
        return Vec::new();
    }
    if level == 1 {
        return partitions(n).into_iter().map(Multipartition::from).collect();
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for head in partitions(k) {
            for tail in multipartitions(n - k, level - 1) {
                let mut comps = vec![head.clone()];
                comps.extend(tail.components().iter().cloned());
                out.push(Multipartition::new(comps).expect("nonempty"));
            }
        }
    }
    out
}
