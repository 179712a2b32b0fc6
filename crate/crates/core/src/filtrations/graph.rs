use crate::complex::{FilteredComplex, Simplex};

use super::{FiltrationError, WeightedGraph};

/// Builds the clique (flag) complex of a weighted graph: every vertex at
/// `vertex_values[v]`, every edge at its weight (raised to its endpoint
/// values if needed), every clique of up to `max_dim + 1` vertices at the
/// maximum of its edge values.
pub fn expand_cliques(
    vertex_values: &[f64],
    edges: &[(usize, usize, f64)],
    max_dim: usize,
) -> FilteredComplex {
    let n = vertex_values.len();
    // upper[v]: neighbours w > v with the edge value, sorted by w
    let mut upper: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for &(u, v, w) in edges {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let value = w.max(vertex_values[a]).max(vertex_values[b]);
        upper[a].push((b, value));
    }
    for list in &mut upper {
        list.sort_by_key(|&(w, _)| w);
    }
    let weight = |a: usize, b: usize| -> f64 {
        let list = &upper[a];
        let i = list
            .binary_search_by_key(&b, |&(w, _)| w)
            .expect("edge present");
        list[i].1
    };

    let mut by_dim: Vec<Vec<(Vec<u32>, f64)>> = vec![Vec::new(); max_dim + 1];
    for (v, &value) in vertex_values.iter().enumerate() {
        by_dim[0].push((vec![v as u32], value));
    }
    if max_dim >= 1 {
        let mut stack: Vec<(Vec<usize>, f64, Vec<usize>)> = Vec::new();
        for v in 0..n {
            let candidates: Vec<usize> = upper[v].iter().map(|&(w, _)| w).collect();
            stack.push((vec![v], vertex_values[v], candidates));
            while let Some((clique, value, candidates)) = stack.pop() {
                for (i, &u) in candidates.iter().enumerate() {
                    let mut new_value = value.max(vertex_values[u]);
                    for &w in &clique {
                        new_value = new_value.max(weight(w, u));
                    }
                    let mut grown = clique.clone();
                    grown.push(u);
                    let dim = grown.len() - 1;
                    by_dim[dim].push((grown.iter().map(|&x| x as u32).collect(), new_value));
                    if dim < max_dim {
                        // candidates after u that are also adjacent to u
                        let next: Vec<usize> = candidates[i + 1..]
                            .iter()
                            .copied()
                            .filter(|&c| upper[u].binary_search_by_key(&c, |&(w, _)| w).is_ok())
                            .collect();
                        if !next.is_empty() {
                            stack.push((grown, new_value, next));
                        }
                    }
                }
            }
        }
    }

    let mut complex = FilteredComplex::new();
    for layer in by_dim {
        for (verts, value) in layer {
            complex.push_unchecked(Simplex::from_sorted(verts), value);
        }
    }
    complex
}

/// Flag complex of a weighted graph with all vertices entering at 0.
///
/// `max_dim` 2 builds triangles (the default for graph data); 3 also adds
/// tetrahedra from 4-cliques so that 2-cycles can be filled.
pub fn flag_complex(g: &WeightedGraph, max_dim: usize) -> Result<FilteredComplex, FiltrationError> {
    if max_dim > 3 {
        return Err(FiltrationError::Invalid(format!(
            "flag complexes are limited to dimension 3, requested {max_dim}"
        )));
    }
    if let Some(&(u, v, w)) = g.edges().iter().find(|e| e.2 < 0.0) {
        return Err(FiltrationError::Invalid(format!(
            "edge ({u}, {v}) has negative weight {w}"
        )));
    }
    Ok(expand_cliques(
        &vec![0.0; g.vertex_count()],
        g.edges(),
        max_dim,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_takes_max_weight() {
        let g = WeightedGraph::new(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]).unwrap();
        let k = flag_complex(&g, 2).unwrap();
        k.validate().unwrap();
        assert_eq!(k.len(), 7);
        assert_eq!(k.value_of(&Simplex::new([0, 1, 2]).unwrap()), Some(3.0));
        assert_eq!(k.value_of(&Simplex::vertex(2)), Some(0.0));
    }

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 5.0)]).unwrap();
        let k = flag_complex(&g, 2).unwrap();
        assert_eq!(k.count_by_dimension(), vec![2, 1]);
        assert_eq!(k.value_of(&Simplex::edge(0, 1)), Some(5.0));
    }

    #[test]
    fn tetrahedra_only_when_requested() {
        let edges: Vec<_> = (0..4)
            .flat_map(|a| ((a + 1)..4).map(move |b| (a, b, (a + b) as f64)))
            .collect();
        let g = WeightedGraph::new(4, edges).unwrap();
        assert_eq!(flag_complex(&g, 2).unwrap().count_by_dimension(), vec![4, 6, 4]);
        let k3 = flag_complex(&g, 3).unwrap();
        assert_eq!(k3.count_by_dimension(), vec![4, 6, 4, 1]);
        assert_eq!(k3.value_of(&Simplex::new([0, 1, 2, 3]).unwrap()), Some(5.0));
        k3.validate().unwrap();
        assert!(flag_complex(&g, 4).is_err());
    }

    #[test]
    fn negative_weight_rejected() {
        let g = WeightedGraph::new(2, [(0, 1, -1.0)]).unwrap();
        assert!(flag_complex(&g, 2).is_err());
    }
}
