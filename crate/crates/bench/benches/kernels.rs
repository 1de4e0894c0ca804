use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fuchsian::catalog::{load_catalog, load_table5};
use fuchsian::exactalg::{charpoly_of_product, product_matrix};
use fuchsian::graded::{phi_a, FuchsianSignature, WeightSystem};
use fuchsian::lattice::{build_fuchsian_lattice, coxeter_factors};
use fuchsian::monodromy::milnor_orlik;
use fuchsian::moonshine::{eta_expansion, verify_table5};
use fuchsian::FrameShape;

fn charpoly(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    for sig in ["0;2,3,7", "2;2,3,5,7", "5;7,11,13,13"] {
        let sig: FuchsianSignature = sig.parse().unwrap();
        let lat = build_fuchsian_lattice(&sig);
        let factors = coxeter_factors(&lat);
        let n = lat.rank();
        group.bench_with_input(BenchmarkId::new("pencil", &sig), &factors, |b, f| {
            b.iter(|| charpoly_of_product(n, black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("dense", &sig), &factors, |b, f| {
            b.iter(|| product_matrix(n, black_box(f)).charpoly())
        });
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let sig: FuchsianSignature = "3;2,5,9,13".parse().unwrap();
    c.bench_function("phi_a", |b| b.iter(|| phi_a(black_box(&sig)).unwrap()));
    let ws = WeightSystem::new(vec![6, 14, 21], vec![42]).unwrap();
    c.bench_function("milnor_orlik", |b| b.iter(|| milnor_orlik(black_box(&ws)).unwrap()));
}

fn moonshine(c: &mut Criterion) {
    let fs: FrameShape = "2^6·6^6/1^6·3^6".parse().unwrap();
    c.bench_function("eta_256", |b| b.iter(|| eta_expansion(black_box(&fs), 256)));
    let catalog = load_catalog().unwrap();
    let table = load_table5().unwrap();
    c.bench_function("table5", |b| b.iter(|| verify_table5(black_box(&catalog), black_box(&table))));
}

criterion_group!(benches, charpoly, polynomials, moonshine);
criterion_main!(benches);
