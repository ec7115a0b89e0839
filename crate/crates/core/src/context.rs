use crate::algebra::{reduce_all, IrreducibleBases};
use crate::error::Result;
use crate::group::IcosahedralGroup;
use crate::irreps::IrrepSet;

/// The group table, its irreps and the 60 irreducible bases, built once.
#[derive(Debug, Clone)]
pub struct Context {
    pub group: IcosahedralGroup,
    pub irreps: IrrepSet,
    pub bases: IrreducibleBases,
}

impl Context {
    pub fn new() -> Result<Self> {
        let group = IcosahedralGroup::new()?;
        let irreps = IrrepSet::new(&group);
        let bases = reduce_all(&group, &irreps)?;
        Ok(Context { group, irreps, bases })
    }
}
