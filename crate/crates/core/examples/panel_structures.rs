//! Panel structures from a complex, a poset and a partition of the vertices.

use facelab::complexes::SimplicialComplex;
use facelab::constructions::{panelize_partition, panelize_simplicial, PanelComplex};
use facelab::io::Input;
use facelab::subset::Mask;

fn summary(name: &str, p: &PanelComplex) {
    println!("{name}: {} panels, {} cells in Y, {} faces", p.m(), p.y().num_cells(), p.faces().len());
    for j in Mask::all(p.m()) {
        let c = p.component_count(j);
        if c > 0 {
            println!("  c_{} = {c}", j.label());
        }
    }
}

fn main() -> facelab::Result<()> {
    let square = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    summary("Y^K for the 4-cycle", &panelize_simplicial(&square)?);

    let poset = Input::from_json(include_str!("../data/two_triangles.json"))?;
    summary("Y^S for two triangles", &poset.panel_complex()?);

    summary("partition {1,3},{2,4}", &panelize_partition(&square, &[vec![0, 2], vec![1, 3]])?);
    Ok(())
}
