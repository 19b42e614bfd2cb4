//! Brute-force helpers that share no code with the library.

#![allow(dead_code)]

/// Every arrangement of `1..=n` by Heap's algorithm, as one-line forms.
pub fn all_one_lines(n: usize) -> Vec<Vec<u32>> {
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Cycle lengths of a one-line permutation of `1..=n`, read by walking
/// images directly.
pub fn cycle_lengths(one_line: &[u32]) -> Vec<usize> {
    let n = one_line.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = one_line[i] as usize - 1;
        }
        lens.push(len);
    }
    lens
}

/// Length of the cycle through `x` and whether `y` is on it.
pub fn orbit(one_line: &[u32], x: u32, y: u32) -> (usize, bool) {
    let mut len = 0;
    let mut hit = false;
    let mut z = x;
    loop {
        len += 1;
        z = one_line[z as usize - 1];
        hit |= z == y;
        if z == x {
            return (len, hit);
        }
    }
}

pub fn all_odd(one_line: &[u32]) -> bool {
    cycle_lengths(one_line).iter().all(|l| l % 2 == 1)
}

pub fn all_even(one_line: &[u32]) -> bool {
    cycle_lengths(one_line).iter().all(|l| l % 2 == 0)
}

/// Cycle of 1 even, all others odd.
pub fn in_p(one_line: &[u32]) -> bool {
    let (l1, _) = orbit(one_line, 1, 1);
    let odd_cycles = cycle_lengths(one_line).iter().filter(|l| *l % 2 == 1).count();
    let total = cycle_lengths(one_line).len();
    l1 % 2 == 0 && odd_cycles == total - 1
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Direct product formula for `((n-1)!!)^2`, `n` even.
pub fn odd_double_factorial_squared(n: u64) -> u64 {
    let d: u64 = (1..n).step_by(2).product();
    d * d
}
