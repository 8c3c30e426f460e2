//! Conjugacy classes by orbit enumeration.

use crate::table::FiniteGroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Members of each class in increasing id order; classes ordered by smallest member.
    pub classes: Vec<Vec<u32>>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, a: u32, b: u32) -> bool {
        self.class_of[a as usize] == self.class_of[b as usize]
    }

    pub fn class_members(&self, g: u32) -> &[u32] {
        &self.classes[self.class_of[g as usize] as usize]
    }
}

/// Orbits of conjugation by the root elements, which generate the group.
pub fn conjugacy_classes(g: &FiniteGroupTable) -> Classes {
    let unset = u32::MAX;
    let mut class_of = vec![unset; g.len()];
    let mut classes = Vec::new();
    for start in 0..g.len() as u32 {
        if class_of[start as usize] != unset {
            continue;
        }
        let cid = classes.len() as u32;
        class_of[start as usize] = cid;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for &h in &g.root_elements {
                let y = g.conj(h, x);
                if class_of[y as usize] == unset {
                    class_of[y as usize] = cid;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    Classes { class_of, classes }
}
