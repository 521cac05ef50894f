//! Scratch exploration harness (run manually with --ignored).

use num_bigint::BigInt;
use twistcurves::invariants::{alexander, LaurentPoly};
use twistcurves::synthesis::{infinity_master, loop_master};
use twistcurves::{BraidWord, EssentialCurve, Pattern, TwistKnot};

type Poly = LaurentPoly<BigInt>;

fn poly(terms: &[(i64, i64)]) -> Poly {
    Poly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

fn pretzel_braid(t: i64) -> BraidWord {
    // P(2t-5, -3, 2) as a 3-braid: σ1^{2t-5} σ2⁻¹ σ1^{-3} σ2⁻¹
    let mut letters = Vec::new();
    let p = 2 * t - 5;
    for _ in 0..p.abs() {
        letters.push(if p >= 0 { 1i64 } else { -1 });
    }
    letters.push(-2);
    letters.extend([-1, -1, -1]);
    letters.push(-2);
    BraidWord::from_signed(3, &letters).unwrap()
}

#[test]
#[ignore]
fn anchor_knot_identifications() {
    // (1,2) loop at t=-1: left trefoil
    let w = twistcurves::synthesize(TwistKnot::new(-1), &EssentialCurve::new(1, 2, Pattern::Loop).unwrap())
        .unwrap()
        .word;
    println!("(1,2)loop t=-1: {} -> {}", w, alexander(&w).unwrap());

    // (5,2) ∞ at t=3: expect 5_2 = 2t - 3 + 2/t
    let w = infinity_master(5, 2, 3);
    println!("(5,2)inf t=3:  {} -> {}", w, alexander(&w).unwrap());
    println!("   expect 5_2: {}", poly(&[(-1, 2), (0, -3), (1, 2)]));

    // (7,3) ∞ at t=3: expect 10_132 = t^2 - t + 1 - 1/t + 1/t^2
    let w = infinity_master(7, 3, 3);
    println!("(7,3)inf t=3:  -> {}", alexander(&w).unwrap());
    println!("expect 10_132: {}", poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));

    // (3,2) loop at t=3..6 vs pretzel braids
    for t in 3..=6 {
        let w = loop_master(3, 2, t);
        let a = alexander(&w).unwrap();
        let p = alexander(&pretzel_braid(t)).unwrap();
        println!("(3,2)loop t={t}: {a}   pretzel: {p}   match: {}", a == p);
    }
    println!("expect 8_20:  {}", poly(&[(-2, 1), (-1, -2), (0, 3), (1, -2), (2, 1)]));

    // (2,1) ∞ stays unknotted for every t
    for t in [2, 3, 5, 8] {
        let w = infinity_master(2, 1, t);
        println!("(2,1)inf t={t}: {} -> {}", w, alexander(&w).unwrap());
    }
}

#[test]
#[ignore]
fn negb_vs_loop_master() {
    // conjecture: the t<=-1 loop word on m+n strands and the m-strand loop
    // master present the same knot (n extra stabilizations)
    for t in [-1i64, -2, -3] {
        for (m, n) in [(2u32, 1u32), (3, 1), (3, 2), (4, 3), (5, 2), (5, 3), (7, 4)] {
            let c = EssentialCurve::new(m, n, Pattern::Loop).unwrap();
            let negb = twistcurves::synthesize(TwistKnot::new(t), &c).unwrap().word;
            let master = loop_master(m, n, t);
            let a = alexander(&negb).unwrap();
            let b = alexander(&master).unwrap();
            println!("t={t} ({m},{n})loop  negb:{a}  master:{b}  match:{}", a == b);
        }
    }
}

#[test]
#[ignore]
fn f8_recursion_consistency() {
    // unreduced mixed words vs the recursively reduced synthesized words
    for (m, n) in [(3u32, 2u32), (8, 5), (5, 3), (7, 4), (7, 5), (9, 5), (13, 8)] {
        let c = EssentialCurve::new(m, n, Pattern::Infinity).unwrap();
        let reduced = twistcurves::synthesize(TwistKnot::new(1), &c).unwrap().word;
        let master = twistcurves::synthesis::f8_unreduced_word(&c).unwrap();
        let a = alexander(&reduced).unwrap();
        let b = alexander(&master).unwrap();
        println!("({m},{n})inf t=1  reduced:{a}  master:{b}  match:{}", a == b);
    }
    for (m, n) in [(2u32, 3u32), (5, 8), (3, 5), (4, 7), (5, 7), (8, 13)] {
        let c = EssentialCurve::new(m, n, Pattern::Loop).unwrap();
        let reduced = twistcurves::synthesize(TwistKnot::new(1), &c).unwrap().word;
        let master = twistcurves::synthesis::f8_unreduced_word(&c).unwrap();
        let a = alexander(&reduced).unwrap();
        let b = alexander(&master).unwrap();
        println!("({m},{n})loop t=1  reduced:{a}  master:{b}  match:{}", a == b);
    }
    // 2b-range curves: master vs the negative 2b word
    for (m, n) in [(5u32, 2u32), (7, 2), (7, 3), (9, 2), (9, 4)] {
        let c = EssentialCurve::new(m, n, Pattern::Infinity).unwrap();
        let reduced = twistcurves::synthesize(TwistKnot::new(1), &c).unwrap().word;
        let master = infinity_master(m, n, 1);
        let a = alexander(&reduced).unwrap();
        let b = alexander(&master).unwrap();
        println!("({m},{n})inf 2b  reduced:{a}  master:{b}  match:{}", a == b);
    }
    // F8 case 1 vs loop master at t=1
    for (m, n) in [(3u32, 1u32), (3, 2), (5, 2), (5, 3), (7, 3)] {
        let c = EssentialCurve::new(m, n, Pattern::Loop).unwrap();
        let w1 = twistcurves::synthesize(TwistKnot::new(1), &c).unwrap().word;
        let w2 = loop_master(m, n, 1);
        let a = alexander(&w1).unwrap();
        let b = alexander(&w2).unwrap();
        println!("({m},{n})loop case1 vs master  match:{}  ({a})", a == b);
    }
}

#[test]
#[ignore]
fn pos_n_gt_m_probes() {
    // what do the frozen PosCase1/2 guesses produce, and do plausible
    // universal alternatives agree?
    for t in [2i64, 3] {
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (3, 4), (2, 5), (3, 5)] {
            let c = EssentialCurve::new(m, n, Pattern::Infinity).unwrap();
            let w = twistcurves::synthesize(TwistKnot::new(t), &c).unwrap().word;
            let a = alexander(&w).unwrap();
            println!("pos1 t={t} ({m},{n})inf: genus_cromwell={} span/2={} {a}",
                (1 + w.len() as i64 - i64::from(w.strands())) / 2, a.span() / 2);
        }
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (3, 4), (2, 5), (3, 5)] {
            let c = EssentialCurve::new(m, n, Pattern::Loop).unwrap();
            let w = twistcurves::synthesize(TwistKnot::new(t), &c).unwrap().word;
            let a = alexander(&w).unwrap();
            println!("pos2 t={t} ({m},{n})loop: genus_cromwell={} span/2={} {a}",
                (1 + w.len() as i64 - i64::from(w.strands())) / 2, a.span() / 2);
        }
    }
}

#[test]
#[ignore]
fn reduction_data_3a() {
    // m >= tn, t >= 2, n >= 2: what genus must the negative form have?
    for (t, m, n) in [
        (2i64, 5u32, 2u32), (2, 7, 2), (2, 9, 2), (2, 7, 3), (2, 8, 3), (2, 11, 3), (2, 9, 4), (2, 11, 4),
        (3, 7, 2), (3, 9, 2), (3, 11, 2), (3, 10, 3), (3, 11, 3),
        (4, 9, 2), (4, 11, 2),
    ] {
        let w = infinity_master(m, n, t);
        let a = alexander(&w).unwrap();
        let g = a.span() / 2;
        // candidate count k- for a negative form on m strands: 2g - 1 + m
        println!("3a t={t} ({m},{n}): span/2={g}  k-(m strands)={}  base_nega={}",
            2 * g - 1 + i64::from(m),
            (t as u64) * u64::from(n) * u64::from(n - 1)
                + u64::from(m - n) * u64::from(m - n - 1)
                + u64::from(n) * u64::from(m - n));
    }
}

#[test]
#[ignore]
fn reduction_data_3b() {
    // n < m < 2n, t >= 2: positive form data
    for (t, m, n) in [
        (2i64, 3u32, 2u32), (2, 5, 3), (2, 7, 4), (2, 5, 4), (2, 7, 5), (2, 8, 5), (2, 9, 5), (2, 7, 6),
        (3, 3, 2), (3, 5, 3), (3, 7, 4), (3, 5, 4), (3, 8, 5),
        (4, 3, 2), (4, 5, 3), (4, 5, 4),
    ] {
        let w = infinity_master(m, n, t);
        let a = alexander(&w).unwrap();
        let g = a.span() / 2;
        println!("3b t={t} ({m},{n}): span/2={g}  k+(n strands)={}  k+(m strands)={}  k+(2n-m strands)={}",
            2 * g - 1 + i64::from(n), 2 * g - 1 + i64::from(m), 2 * g - 1 + i64::from(2 * n - m));
    }
}

#[test]
#[ignore]
fn reduction_data_4a() {
    // loop, m >= tn, t >= 3, n >= 2 (t=2 is already negative)
    for (t, m, n) in [
        (3i64, 7u32, 2u32), (3, 9, 2), (3, 11, 2), (3, 10, 3), (3, 11, 3),
        (4, 9, 2), (4, 11, 2), (4, 13, 3),
        (5, 11, 2),
    ] {
        let w = loop_master(m, n, t);
        let a = alexander(&w).unwrap();
        let g = a.span() / 2;
        println!("4a t={t} ({m},{n}): span/2={g}  k-(m strands)={}  base_loopmaster_kminus={}",
            2 * g - 1 + i64::from(m),
            u64::from(m - n) * u64::from(m - n - 1) + 3 * u64::from(n) * u64::from(m - n));
    }
}

#[test]
#[ignore]
fn identify_3a_knots() {
    use twistcurves::invariants::jones_kauffman;
    for (t, m, n) in [(2i64, 5u32, 2u32), (2, 7, 3), (2, 9, 4), (2, 7, 2), (3, 7, 2)] {
        let w = infinity_master(m, n, t);
        let a = alexander(&w).unwrap();
        let j = if w.len() <= 24 { format!("{}", jones_kauffman(&w, 24).unwrap()) } else { "-".into() };
        println!("3a t={t} ({m},{n}): det={}  alex={a}", a.eval_unit(&BigInt::from(-1)));
        println!("    jones={j}");
    }
    // reference torus knots
    for q in [5i64, 7, 9, 11] {
        let w = BraidWord::from_signed(2, &vec![-1; q as usize]).unwrap();
        println!("T(2,-{q}): alex={}  jones={}", alexander(&w).unwrap(), jones_kauffman(&w, 24).unwrap());
    }
}

#[test]
#[ignore]
fn try_4a_candidate() {
    use twistcurves::braid::{full_twist_block, pass_block, BraidWord as BW, Sign};
    // cabled full twist over fat strands of given widths, all one sign
    fn cabled_ft(start: u32, widths: &[u32], sign: Sign) -> Vec<twistcurves::Letter> {
        let k = widths.len();
        let mut w: Vec<u32> = widths.to_vec();
        let mut letters = Vec::new();
        for _round in 0..k {
            for i in 0..k - 1 {
                // fat generator i: swap fat strands i, i+1
                let pos: u32 = start + w[..i].iter().sum::<u32>();
                letters.extend(pass_block(pos, w[i], w[i + 1], sign));
                w.swap(i, i + 1);
            }
        }
        letters
    }
    for (t, m, n) in [(3i64, 7u32, 2u32), (3, 10, 3), (4, 9, 2), (3, 9, 2), (5, 11, 2), (4, 13, 3)] {
        let master = loop_master(m, n, t);
        // candidate: drop the positive twists; B-region = (t-2) n-blocks plus
        // R = m-(t-1)n, with the n-block internal twists cancelled
        let r = m - ((t - 1) as u32) * n;
        let mut widths = vec![n; (t - 2) as usize];
        widths.push(r);
        let mut wv = BW::identity(m);
        wv.extend(full_twist_block(n + 1 + ((t - 2) as u32) * n, r, Sign::Negative, 1));
        wv.extend(cabled_ft(n + 1, &widths, Sign::Negative));
        wv.extend(pass_block(1, n, m - n, Sign::Negative));
        wv.extend(pass_block(1, m - n, n, Sign::Negative));
        wv.extend(pass_block(1, n, m - n, Sign::Negative));
        let ca = alexander(&master).unwrap();
        let cb = alexander(&wv).unwrap();
        println!(
            "4a t={t} ({m},{n}): candidate k-={} components={} match={}",
            wv.crossing_counts().k_minus,
            wv.closure_components(),
            ca == cb
        );
    }
}
