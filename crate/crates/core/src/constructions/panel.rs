use rayon::prelude::*;

use crate::complexes::{SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::subset::{Mask, MAX_INDEX};

/// A connected component of some `P_∩J`, stored once under `J = I_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Panel index `I_f`.
    pub panel_index: Mask,
    /// Smallest cell id in the face; together with `panel_index` it names the face.
    pub anchor: usize,
    pub cells: Subcomplex,
}

/// How a panel structure was produced. Poset-derived structures remember,
/// for each poset element, its vertex set and the cell of `Y` at its barycenter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Generic,
    Simplicial,
    Poset,
    Partition(Vec<Mask>),
}

/// A triangulated space `Y` with panels `P_1..P_m`.
#[derive(Debug, Clone)]
pub struct PanelComplex {
    y: SimplicialComplex,
    panels: Vec<Subcomplex>,
    cell_index: Vec<Mask>,
    faces: Vec<Face>,
    origin: Origin,
    elements: Vec<(Mask, usize)>,
}

impl PanelComplex {
    pub(crate) fn from_cell_index(
        y: SimplicialComplex,
        m: usize,
        cell_index: Vec<Mask>,
        origin: Origin,
        elements: Vec<(Mask, usize)>,
    ) -> PanelComplex {
        let panels = (0..m)
            .map(|j| {
                let mut s = Subcomplex::empty(y.num_cells());
                for (id, i) in cell_index.iter().enumerate() {
                    if i.contains(j) {
                        s.insert(id);
                    }
                }
                s
            })
            .collect();
        let mut p = PanelComplex {
            y,
            panels,
            cell_index,
            faces: Vec::new(),
            origin,
            elements,
        };
        p.faces = p.compute_faces();
        p
    }

    fn compute_faces(&self) -> Vec<Face> {
        let per_j: Vec<Vec<Face>> = Mask::all(self.m())
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&j| {
                self.components(j)
                    .into_iter()
                    .filter_map(|cells| {
                        let index = cells
                            .iter()
                            .fold(Mask::full(self.m()), |acc, c| acc.intersection(self.cell_index[c]));
                        (index == j).then(|| Face {
                            panel_index: j,
                            anchor: cells.first().expect("components are nonempty"),
                            cells,
                        })
                    })
                    .collect()
            })
            .collect();
        per_j.into_iter().flatten().collect()
    }

    pub fn y(&self) -> &SimplicialComplex {
        &self.y
    }

    /// Number of panels `m`.
    pub fn m(&self) -> usize {
        self.panels.len()
    }

    pub fn panels(&self) -> &[Subcomplex] {
        &self.panels
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// `I(c) = {j : c ∈ P_j}` for a cell of `Y`.
    pub fn cell_index(&self, id: usize) -> Mask {
        self.cell_index[id]
    }

    /// `P_∩J`; equals `Y` for `J = ∅`.
    pub fn intersection(&self, j: Mask) -> Subcomplex {
        self.collect(|i| j.is_subset(i))
    }

    /// `P_J`; empty for `J = ∅`.
    pub fn union(&self, j: Mask) -> Subcomplex {
        self.collect(|i| !i.intersection(j).is_empty())
    }

    /// Cells of `Y` lying in no panel.
    pub fn core(&self) -> Subcomplex {
        self.collect(Mask::is_empty)
    }

    fn collect(&self, keep: impl Fn(Mask) -> bool) -> Subcomplex {
        let mut s = Subcomplex::empty(self.y.num_cells());
        for (id, &i) in self.cell_index.iter().enumerate() {
            if keep(i) {
                s.insert(id);
            }
        }
        s
    }

    /// Connected components of `P_∩J`, ordered by smallest cell id.
    pub fn components(&self, j: Mask) -> Vec<Subcomplex> {
        self.y.components(&self.intersection(j))
    }

    /// `c_J`, the number of components of `P_∩J`.
    pub fn component_count(&self, j: Mask) -> usize {
        self.components(j).len()
    }

    /// All faces, ordered by panel index (as a bitmask) and then anchor cell.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces whose panel index is exactly `J`.
    pub fn faces_with_index(&self, j: Mask) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(move |(_, f)| f.panel_index == j)
    }

    /// Inclusion order on faces.
    pub fn face_leq(&self, a: usize, b: usize) -> bool {
        self.faces[a].cells.is_subset(&self.faces[b].cells)
    }

    /// Number of poset elements (including the least one) for poset-derived
    /// structures; zero otherwise.
    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    /// Vertex set of a poset element.
    pub fn element_vertex_set(&self, e: usize) -> Mask {
        self.elements[e].0
    }

    /// Cell of `Y` at the barycenter of a poset element (the apex for the least element).
    pub fn element_barycenter(&self, e: usize) -> usize {
        self.elements[e].1
    }

    /// The face corresponding to a poset element: the component of
    /// `P_∩V(σ)` through the barycenter of `σ`.
    pub fn face_of_element(&self, e: usize) -> usize {
        let (j, cell) = self.elements[e];
        self.faces
            .iter()
            .position(|f| f.panel_index == j && f.cells.contains(cell))
            .expect("every element barycenter lies in a face with its own vertex set")
    }
}

/// Panel structure from explicit panels, each a subcomplex of `y`.
pub fn panelize_generic(y: SimplicialComplex, panels: Vec<Subcomplex>) -> Result<PanelComplex> {
    if panels.len() > MAX_INDEX + 1 {
        return Err(Error::Input(format!("at most {} panels are supported", MAX_INDEX + 1)));
    }
    for (index, p) in panels.iter().enumerate() {
        if p.capacity() != y.num_cells() || !y.is_closed(p) {
            return Err(Error::NotASubcomplex {
                index: index + 1,
                reason: "not closed under faces".into(),
            });
        }
    }
    let mut cell_index = vec![Mask::EMPTY; y.num_cells()];
    for (j, p) in panels.iter().enumerate() {
        for id in p.iter() {
            cell_index[id] = cell_index[id].union(Mask::singleton(j));
        }
    }
    Ok(PanelComplex::from_cell_index(y, panels.len(), cell_index, Origin::Generic, Vec::new()))
}

/// Panel structure from simplex lists: panel `j` is the subcomplex generated by `panels[j]`.
pub fn panelize_from_simplices(y: SimplicialComplex, panels: &[Vec<Vec<u32>>]) -> Result<PanelComplex> {
    let subs = panels
        .iter()
        .enumerate()
        .map(|(i, simplices)| {
            y.generate(simplices).map_err(|e| Error::NotASubcomplex {
                index: i + 1,
                reason: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    panelize_generic(y, subs)
}
