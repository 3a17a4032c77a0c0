//! Command-line behaviour: golden output, exit codes, round trips.

use std::path::{Path, PathBuf};

use localdim::cli::run;
use localdim::diffgraph::{verify_cover, CoverKind};
use localdim::formats::{parse_cover, parse_poset, parse_realizer};
use localdim::generators::standard_example;
use localdim::realizer::verify_local_realizer;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("localdim").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const S3: &str = "poset 6
# 1 = a1
# 2 = a2
# 3 = a3
# 4 = b1
# 5 = b2
# 6 = b3
1 < 5
1 < 6
2 < 4
2 < 6
3 < 4
3 < 5
";

#[test]
fn gen_standard_example_golden() {
    let r = cli(&["gen", "standard", "3"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, S3);
    assert_eq!(parse_poset(&r.out).unwrap(), standard_example(3).0);
}

#[test]
fn gen_families_round_trip() {
    for args in [
        vec!["chain", "4"],
        vec!["antichain", "3"],
        vec!["boolean", "3"],
        vec!["layers", "1", "2", "4"],
    ] {
        let mut argv = vec!["gen"];
        argv.extend(&args);
        let r = cli(&argv);
        assert_eq!(r.code, 0, "{args:?}: {}", r.err);
        parse_poset(&r.out).unwrap();
    }
    let dir = tempfile::tempdir().unwrap();
    let c2 = write(dir.path(), "c2.txt", "poset 2\n1 < 2\n");
    let r = cli(&["gen", "product", s(&c2), s(&c2)]);
    assert_eq!(parse_poset(&r.out).unwrap().len(), 4);
    let r = cli(&["gen", "split", s(&c2)]);
    assert_eq!(parse_poset(&r.out).unwrap().height(), 2);
    assert_eq!(cli(&["gen", "wheel", "3"]).code, 4);
    assert_eq!(cli(&["gen", "chain"]).code, 4);
}

#[test]
fn ldim_and_dim_of_s3() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s3.txt", S3);
    let r = cli(&["ldim", s(&p)]);
    assert_eq!((r.code, r.out.as_str()), (0, "3\n"));
    let r = cli(&["dim", "--input", s(&p)]);
    assert_eq!((r.code, r.out.as_str()), (0, "3\n"));

    let w = dir.path().join("w.txt");
    let r = cli(&["ldim", s(&p), "--output", s(&w)]);
    assert_eq!(r.out, "3\n");
    let v = cli(&["verify", "local", s(&p), s(&w)]);
    assert_eq!((v.code, v.out.as_str()), (0, "ok: local realizer, mu 3\n"));

    let r = cli(&["dim", s(&p), "--emit-certificate"]);
    assert_eq!(r.out.lines().count(), 4);
    let w = write(dir.path(), "d.txt", r.out.split_once('\n').unwrap().1);
    assert_eq!(cli(&["verify", "realizer", s(&p), s(&w)]).code, 0);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s3.txt", S3);
    // The height-two realizer without its last ple misses a reversal.
    let text = "ple: 1 2 3 4 5 6\nple: 3 2 1 6 5 4\nple: 4 1\nple: 5 2\n";
    let w = write(dir.path(), "w.txt", text);
    let r = cli(&["verify", "local", s(&p), s(&w)]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("violation: "), "{}", r.out);
    assert_eq!(std::fs::read_to_string(&w).unwrap(), text);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), S3);

    let r = cli(&["verify", "realizer", s(&p), s(&w)]);
    assert_eq!(r.code, 1);

    let g = write(dir.path(), "g.txt", "bigraph 2 2\n1 1\n1 2\n2 1\n");
    let good = write(dir.path(), "c.txt", "rect: 1 | 1,2\nrect: 2 | 1\n");
    let bad = write(dir.path(), "b.txt", "rect: 1,2 | 1,2\n");
    assert_eq!(cli(&["verify", "cover", s(&g), s(&good)]).code, 0);
    let r = cli(&["verify", "cover", s(&g), s(&bad)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.out, "violation: member 1 uses edge (2, 2) which is not in the host\n");
    let diff = write(dir.path(), "d.txt", "diff: 1,2 | 1,2 | 2,1\n");
    assert_eq!(cli(&["verify", "cover", s(&g), s(&diff), "--kind", "difference"]).code, 0);
    assert_eq!(cli(&["verify", "cover", s(&g), s(&diff)]).code, 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "poset 2\n1 < 5\n");
    let r = cli(&["dim", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 2"), "{}", r.err);

    let s6 = write(dir.path(), "s6.txt", &cli(&["gen", "standard", "6"]).out);
    assert_eq!(cli(&["dim", s(&s6)]).code, 3);
    assert_eq!(cli(&["ldim", s(&s6), "--max-size", "12", "--budget-nodes", "5"]).code, 3);

    assert_eq!(cli(&["frobnicate"]).code, 4);
    assert_eq!(cli(&["dim"]).code, 4);
    assert_eq!(cli(&["dim", "/nonexistent/poset.txt"]).code, 4);
    assert_eq!(cli(&["construct", "staircase", "1"]).code, 4);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn constructions_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (s3, _) = standard_example(3);
    let p = write(dir.path(), "s3.txt", S3);

    for args in [
        vec!["construct", "height2", s(&p)],
        vec!["construct", "removal", "pair", s(&p)],
        vec!["construct", "removal", "quadruple", s(&p)],
    ] {
        let r = cli(&args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.err);
        let real = parse_realizer(&r.out, 6).unwrap();
        verify_local_realizer(&s3, &real).unwrap().unwrap();
    }
    let r = cli(&["construct", "height2", s(&p)]);
    assert!(r.out.starts_with("# mu 3\n"), "{}", r.out);

    let r = cli(&["construct", "split-bound", s(&p)]);
    assert!(r.out.contains("# mu 5\n# ldim <= 9\n"), "{}", r.out);

    let r = cli(&["construct", "bogart", s(&p), "--ca", "2", "--cb", "5"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let ext = parse_realizer(&r.out, 6).unwrap();
    assert!(s3.is_linear_extension(ext.ples()[0].elements()));
    assert_eq!(cli(&["construct", "bogart", s(&p), "--ca", "2", "--cb", "4"]).code, 4);

    let c2 = write(dir.path(), "c2.txt", "poset 2\n1 < 2\n");
    let r2 = write(dir.path(), "r2.txt", "ple: 1 2\n");
    let r = cli(&["construct", "product", s(&c2), s(&r2), s(&c2), s(&r2)]);
    assert!(r.out.starts_with("# mu 2\n"), "{}", r.out);

    let r = cli(&["construct", "staircase", "4"]);
    let f = parse_cover(&r.out).unwrap();
    let g = localdim::constructions::staircase_graph(15);
    assert_eq!(verify_cover(&g, &f, CoverKind::Biclique).unwrap().max_mult, 3);
    assert!(r.out.starts_with("# H_15: max multiplicity 3"));

    let r = cli(&["construct", "young", "3", "2", "1"]);
    assert_eq!(r.out, "# max multiplicity 2 (bound 2)\nrect: 1,2 | 1,2\nrect: 3 | 1\nrect: 1 | 3\n");
    assert_eq!(cli(&["construct", "young", "1", "2"]).code, 4);

    let r = cli(&["construct", "boolean", "3"]);
    assert!(r.out.starts_with("# mu 3\n"));
}

#[test]
fn bound_boolean_golden() {
    let r = cli(&["bound", "boolean", "1024"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("bound_value  27.17"), "{}", r.out);
    assert!(r.out.contains("chain_holds  true"));
    assert_eq!(cli(&["bound", "boolean", "4"]).code, 4);
}

#[test]
fn experiment_is_deterministic() {
    let args = ["experiment", "random-bipartite", "--n1", "4", "--n2", "4", "--trials", "3", "--seed", "7"];
    let a = cli(&args);
    assert_eq!(a.code, 0, "{}", a.err);
    assert_eq!(a.out, cli(&args).out);
    assert!(a.out.starts_with("# G(4,4,0.367879) seed 7\ntrial  edges"));
    assert_eq!(a.out.lines().count(), 5);
    let mut tsv: Vec<&str> = args.to_vec();
    tsv.push("--tsv");
    let t = cli(&tsv);
    assert!(t.out.contains("trial\tedges\tblock"));
    assert_ne!(a.out, cli(&["experiment", "random-bipartite", "--n1", "4", "--n2", "4", "--trials", "3", "--seed", "8"]).out);
    assert_eq!(cli(&["experiment", "random-bipartite", "--n1", "4", "--n2", "4", "--p", "2"]).code, 4);
}

#[test]
fn survey_golden() {
    let r = cli(&["survey", "posets", "--max-n", "3"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let expected = "\
n  dim  ldim  posets
1    1     1       1
2    1     1       1
2    2     2       1
3    1     1       1
3    2     2       4
# 8 posets, ldim <= dim fails on 0
";
    assert_eq!(r.out, expected);
}
