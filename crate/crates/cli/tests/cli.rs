use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pandemos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pandemos"))
        .args(args)
        .env_remove("PANDEMOS_OUT")
        .output()
        .expect("binary runs")
}

fn shipped(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn short_config(dir: &Path) -> String {
    let path = dir.join("short.toml");
    fs::write(
        &path,
        "name = \"short\"\nticks_total = 40\n\n[population]\ntarget = 120\n",
    )
    .unwrap();
    path.to_string_lossy().into_owned()
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

#[test]
fn shipped_configs_validate() {
    for name in [
        "baseline",
        "close-schools",
        "work-at-home",
        "lockdown-no-subsidy",
        "lockdown-subsidy",
    ] {
        let path = shipped(&format!("{name}.toml"));
        let out = pandemos(&["validate", "--config", path.to_str().unwrap()]);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn unknown_flag_prints_usage_and_exits_1() {
    let out = pandemos(&["run", "--config", "baseline", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn config_problems_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "ticks_total = [").unwrap();
    let unknown = dir.path().join("unknown.toml");
    fs::write(&unknown, "tiks_total = 5").unwrap();
    for arg in [bad.to_str().unwrap(), unknown.to_str().unwrap(), "no-such-scenario"] {
        let out = pandemos(&["validate", "--config", arg]);
        assert_eq!(out.status.code(), Some(1), "{arg}");
    }
    let out = pandemos(&["validate", "--config", bad.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn unwritable_output_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let config = short_config(dir.path());
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "").unwrap();
    let target = blocker.join("out");
    let out = pandemos(&["run", "--config", &config, "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("blocker"));
}

#[test]
fn run_twice_gives_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let config = short_config(dir.path());
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let out = pandemos(&["run", "--config", &config, "--seed", "11", "--out", d.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let files = read_dir_sorted(&a);
    let names: Vec<&str> = files.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["manifest.toml", "run_0.csv", "scalars.csv", "summary.csv"]);
    assert_eq!(files, read_dir_sorted(&b));
    let run = String::from_utf8(files[1].1.clone()).unwrap();
    assert_eq!(run.lines().count(), 41);
}

#[test]
fn batch_is_independent_of_thread_count_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let config = short_config(dir.path());
    let seq = dir.path().join("seq");
    let par = dir.path().join("par");
    let common = ["batch", "--config", &config, "--runs", "4", "--base-seed", "9"];
    let mut args = common.to_vec();
    args.extend(["--parallel", "1", "--out", seq.to_str().unwrap()]);
    assert!(pandemos(&args).status.success());
    let mut args = common.to_vec();
    args.extend(["--parallel", "3", "--out", par.to_str().unwrap()]);
    assert!(pandemos(&args).status.success());
    assert_eq!(read_dir_sorted(&seq), read_dir_sorted(&par));
    assert_eq!(read_dir_sorted(&seq).len(), 7);

    let again = dir.path().join("again");
    let manifest = seq.join("manifest.toml");
    let out = pandemos(&[
        "replay",
        "--manifest",
        manifest.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(read_dir_sorted(&seq), read_dir_sorted(&again));
}

#[test]
fn output_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let config = short_config(dir.path());
    let target = dir.path().join("from-env");
    let out = Command::new(env!("CARGO_BIN_EXE_pandemos"))
        .args(["run", "--config", &config])
        .env("PANDEMOS_OUT", &target)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(target.join("run_0.csv").is_file());
}

#[test]
fn scenarios_list_and_show() {
    let out = pandemos(&["scenarios", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("lockdown-subsidy"));

    let out = pandemos(&["scenarios", "show", "close-schools"]);
    assert!(out.status.success());
    let shown = String::from_utf8(out.stdout).unwrap();
    assert_eq!(shown, fs::read_to_string(shipped("close-schools.toml")).unwrap());
}

#[test]
fn zero_runs_is_rejected() {
    let out = pandemos(&["batch", "--config", "baseline", "--runs", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
