use simplexnet::formats::*;
use simplexnet_core::exactcover::random_instance;
use simplexnet_core::frustration::enumerate_ground;
use simplexnet_core::lattice::{build_six_site, build_triangular_patch, random_lattice};
use simplexnet_core::network::contract_diagonal;
use simplexnet_core::simplex::{mix, random_simplex, w_state, wbar_state};
use simplexnet_core::{Complex64, NetworkSpec, PureState, Region};

#[test]
fn lattice_round_trip() {
    let mut files = vec![
        LatticeFile::new(build_triangular_patch(3).unwrap()),
        LatticeFile::new(build_six_site()),
        LatticeFile::new(simplexnet_core::experiments::anisotropy::single_triangle()),
    ];
    for seed in 0..5 {
        files.push(LatticeFile::new(random_lattice(9, 2, false, seed).unwrap()));
    }
    files[1].regions = vec![
        Region::new(6, [0, 1, 2]).unwrap(),
        Region::new(6, [5]).unwrap(),
    ];
    for f in files {
        let text = write_lattice(&f);
        assert_eq!(parse_lattice(&text).unwrap(), f, "{text}");
    }
}

#[test]
fn lattice_parse_errors_name_the_line() {
    let err = parse_lattice("n 3\nt 0 1\n").unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
    assert!(parse_lattice("t 0 1 2\n").is_err());
    assert!(parse_lattice("n 4\nt 0 1 2\n").is_err());
    assert!(parse_lattice("n 3\n# comment\n\nt 0 1 2\nr 0 1\n").is_ok());
    assert!(parse_lattice("n 6\nk patch 2\nt 0 1 2\n").is_err());
    assert!(parse_lattice("n 7\nk patch 2\n").is_err());
}

#[test]
fn bare_patch_line_generates_the_patch() {
    let f = parse_lattice("k patch 3\nr 0 1 2\n").unwrap();
    assert_eq!(f.lattice, build_triangular_patch(3).unwrap());
    assert_eq!(f.regions.len(), 1);
}

#[test]
fn region_lists() {
    assert_eq!(parse_region(6, "0, 2,4").unwrap().sites(), [0, 2, 4]);
    assert!(parse_region(3, "0,5").is_err());
    assert!(parse_region(3, "a").is_err());
}

#[test]
fn network_round_trip_and_build() {
    let l = build_six_site();
    let s = mix(&[(&w_state(), 1.0), (&wbar_state(), 1.0)]).unwrap();
    let mut file = NetworkFile::uniform(&l, &s);
    file.simplices.push(SimplexDef::from_simplex(
        &random_simplex(3, 9).unwrap().with_label("R"),
    ));
    file.simplices.push(SimplexDef::Symmetric {
        label: "S".into(),
        coeffs: [1.0, -1.0, 1.0, 1.0, 1.0],
    });
    file.assignment[1] = "R".into();
    let text = write_network(&file);
    let parsed = parse_network(&text).unwrap();
    assert_eq!(parsed, file);
    let spec = parsed.to_spec().unwrap();
    assert_eq!(spec.labels()[1], "R");
}

#[test]
fn network_text_forms() {
    let text = "n 3\nt 0 1 2\ns 3 W 0 1 1 0 1 0 0 0\na * W\n";
    let spec = parse_network(text).unwrap().to_spec().unwrap();
    let c = contract_diagonal(&spec).unwrap();
    assert!((c.state.amplitude(1).re - 1.0 / 3f64.sqrt()).abs() < 1e-12);

    let complex = "n 3\nt 0 1 2\ns 3 Z 0 1:1 0 0 0 0 0 0\na 0 Z\n";
    let f = parse_network(complex).unwrap();
    let SimplexDef::Table { amplitudes, .. } = &f.simplices[0] else {
        panic!()
    };
    assert_eq!(amplitudes[1], Complex64::new(1.0, 1.0));

    let square = "n 4\nq 0 1 2 3\nsym4 1 0 0 0 1\na * sym4\n";
    assert_eq!(
        parse_network(square).unwrap().to_spec().unwrap().n_sites(),
        4
    );

    assert!(parse_network("n 3\nt 0 1 2\ns 3 W 0 1 1 0 1 0 0 0\n").is_err());
    assert!(parse_network("n 3\nt 0 1 2\na * W\n").is_err());
    assert!(parse_network("n 3\nt 0 1 2\ns 3 W 0 1\na * W\n").is_err());
}

#[test]
fn state_csv_round_trip() {
    let l = build_triangular_patch(2).unwrap();
    let spec = NetworkSpec::uniform(&l, &random_simplex(3, 4).unwrap()).unwrap();
    let state = contract_diagonal(&spec).unwrap().state;
    let text = write_state_csv(&state);
    assert!(text.starts_with(STATE_CSV_HEADER));
    let back = parse_state_csv(&text).unwrap();
    assert!(state.max_abs_diff_up_to_phase(&back) < 1e-15);

    let sparse = PureState::basis(3, 5).unwrap();
    let text = write_state_csv(&sparse);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("101,1,0"));
    assert!(parse_state_csv("bitstring,re,im\n01,1,0\n001,1,0\n").is_err());
    assert!(parse_state_csv("x,y\n").is_err());
}

#[test]
fn manifold_round_trip() {
    let m = enumerate_ground(&build_six_site()).unwrap();
    let file = ManifoldFile::from(&m);
    let text = write_manifold(&file);
    assert!(text.starts_with("M=26 E0=-3\n"));
    assert_eq!(parse_manifold(&text).unwrap(), file);
    assert!(parse_manifold("M=2 E0=-1\n001\n").is_err());
}

#[test]
fn cover_round_trip() {
    for seed in 0..10 {
        let inst = random_instance(10, seed as usize, seed).unwrap();
        assert_eq!(parse_cover(&write_cover(&inst)).unwrap(), inst);
    }
    assert!(parse_cover("p ec 3 2\nc 0 1 2\n").is_err());
    assert!(parse_cover("p ec 3 1\nc 0 1 2\nc 0 1 2\n").is_err());
}
