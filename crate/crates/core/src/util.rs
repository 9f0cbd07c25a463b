/// All permutations of `0..n` paired with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, 1, &mut out);
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if k == cur.len() {
        out.push((cur.clone(), sign));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, if i == k { sign } else { -sign }, out);
        cur.swap(k, i);
    }
}
