use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use hp_scenarios::CATALOGUE;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_hopf-partial");

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn cli(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("HOPF_PARTIAL_JOBS").output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn failing(report: &Value) -> Vec<String> {
    let mut out = Vec::new();
    for s in report["sections"].as_array().into_iter().flatten() {
        for c in s["checks"].as_array().into_iter().flatten() {
            if c["status"] == "fail" {
                out.push(format!("{}/{}", s["name"].as_str().unwrap(), c["name"].as_str().unwrap()));
            }
        }
    }
    out
}

fn main() {
    let mut failed = 0;
    let tmp = tempfile::tempdir().unwrap();
    let path = |name: &str| tmp.path().join(name);
    let p = |name: &str| path(name).to_str().unwrap().to_string();

    let o = cli(&["verify", "smoke-z2", "--out", &p("smoke.json")]);
    let r = read_json(&path("smoke.json"));
    line("verify smoke-z2 exits 0 with a clean report", code(&o) == 0 && r["summary"]["failed"] == 0, &mut failed);

    let clock = Instant::now();
    let a = cli(&["verify", "klein4", "--jobs", "1", "--out", &p("k1.json")]);
    let b = cli(&["verify", "klein4", "--jobs", "8", "--out", &p("k8.json")]);
    let same = std::fs::read(path("k1.json")).ok().is_some_and(|x| Some(x) == std::fs::read(path("k8.json")).ok());
    line(
        &format!("verify klein4 exits 0 with --jobs 1 and --jobs 8, reports byte-identical ({:.1?})", clock.elapsed()),
        code(&a) == 0 && code(&b) == 0 && same,
        &mut failed,
    );

    let o = Command::new(BIN).args(["verify", "smoke-z2", "--out", &p("env.json")]).env("HOPF_PARTIAL_JOBS", "3").output().unwrap();
    line(
        "HOPF_PARTIAL_JOBS is honoured and leaves the report unchanged",
        code(&o) == 0 && std::fs::read(path("env.json")).ok() == std::fs::read(path("smoke.json")).ok(),
        &mut failed,
    );

    let o = cli(&["verify", "klein4", "--mutate", "omega:negate:0", "--out", &p("km.json")]);
    let f = failing(&read_json(&path("km.json")));
    line(
        "verify klein4 --mutate omega:negate:0 exits 1 and names the cocycle law",
        code(&o) == 1 && f.iter().any(|x| x == "cocycle/cocycle-law") && f.iter().any(|x| x == "crossed-product/criterion-cocycle-law"),
        &mut failed,
    );

    for entry in CATALOGUE.iter() {
        let m = format!("{}:{}:0", entry.target, entry.op);
        let cfg = path(&format!("{m}.config.json"));
        std::fs::write(&cfg, entry.config).unwrap();
        let name: Value = serde_json::from_str(entry.config).unwrap();
        let name = name["name"].as_str().unwrap();
        let out = path(&format!("{m}.json"));
        let o = cli(&["verify", name, "--config", cfg.to_str().unwrap(), "--mutate", &m, "--out", out.to_str().unwrap()]);
        let f = std::fs::read_to_string(&out).ok().map(|t| failing(&serde_json::from_str(&t).unwrap())).unwrap_or_default();
        let ok = code(&o) == 1 && entry.expected.iter().all(|e| f.iter().any(|x| x == e));
        line(&format!("verify {name} --mutate {m} exits 1, failing {}", entry.expected.join(", ")), ok, &mut failed);
    }

    let o = cli(&["verify", "smoke-z2", "--mutate", "v:scale:0", "--verbosity", "3", "--out", &p("wit.json")]);
    let r = read_json(&path("wit.json"));
    let full = r["sections"].as_array().into_iter().flatten().flat_map(|s| s["checks"].as_array().into_iter().flatten()).any(|c| {
        c["status"] == "fail" && c["all_witnesses"].as_array().is_some_and(|w| w.len() as u64 == c["failures"].as_u64().unwrap_or(0))
    });
    line("--verbosity 3 lists every witness of a failing check", code(&o) == 1 && full, &mut failed);

    line("verify unknown-name exits 2", code(&cli(&["verify", "unknown-name"])) == 2, &mut failed);
    line("malformed --mutate exits 2", code(&cli(&["verify", "smoke-z2", "--mutate", "omega:flip:0"])) == 2, &mut failed);
    std::fs::write(path("bad.json"), r#"{"m": 3}"#).unwrap();
    line("invalid config exits 2", code(&cli(&["verify", "smoke-z2", "--config", &p("bad.json")])) == 2, &mut failed);
    line("missing subcommand exits 2", code(&cli(&[])) == 2, &mut failed);

    let o = cli(&["table", "smoke-z2", "crossed-product", "--out", &p("cp.json")]);
    let t = read_json(&path("cp.json"));
    let rank = t["rank"].as_u64().unwrap_or(0);
    line(
        &format!("table smoke-z2 crossed-product has rank² = {} rows", rank * rank),
        code(&o) == 0 && rank > 0 && t["rows"].as_array().map(Vec::len) == Some((rank * rank) as usize),
        &mut failed,
    );
    let o = cli(&["table", "klein4", "omega", "--out", &p("omega.json")]);
    let t = read_json(&path("omega.json"));
    let rows = t["rows"].as_array().cloned().unwrap_or_default();
    let signs = rows.iter().all(|r| r["value"].as_object().is_some_and(|m| m.values().all(|v| v == "1" || v == "-1")));
    line(&format!("table klein4 omega: {} sparse rows, coefficients ±1", rows.len()), code(&o) == 0 && !rows.is_empty() && signs, &mut failed);
    let o = cli(&["table", "klein4", "hopf", "--out", &p("hopf.json")]);
    line("table klein4 hopf serializes the dim-64 Hopf algebra", code(&o) == 0 && read_json(&path("hopf.json"))["dim"] == 64, &mut failed);
    line("table with an unknown object exits 2", code(&cli(&["table", "smoke-z2", "nope"])) == 2, &mut failed);

    let dir = p("golden");
    let rec = cli(&["golden", "smoke-z2", "record", "--dir", &dir]);
    let chk = cli(&["golden", "smoke-z2", "check", "--dir", &dir]);
    line("golden record then check exits 0", code(&rec) == 0 && code(&chk) == 0, &mut failed);
    let g = path("golden").join("smoke-z2.json");
    let text = std::fs::read_to_string(&g).unwrap().replacen("\"checked\": 512", "\"checked\": 511", 1);
    std::fs::write(&g, text).unwrap();
    let chk = cli(&["golden", "smoke-z2", "check", "--dir", &dir]);
    let diff = String::from_utf8_lossy(&chk.stdout).to_string();
    line(
        &format!("golden check after an edit exits 1 with a field-level diff ({})", diff.trim()),
        code(&chk) == 1 && diff.contains("/checked: 511 -> 512"),
        &mut failed,
    );
    line("golden check with a missing golden exits 2", code(&cli(&["golden", "klein4", "check", "--dir", &dir])) == 2, &mut failed);
    for s in ["smoke-z2", "induced-functions", "group-dictionary"] {
        line(&format!("golden check {s} against the shipped golden exits 0"), code(&cli(&["golden", s, "check"])) == 0, &mut failed);
    }

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
