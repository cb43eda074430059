//! Little-endian primitive codec shared by all serializers.

use crate::error::{Error, Result};
use std::io::{Read, Write};

pub(crate) fn write_u64<W: Write>(w: &mut W, x: u64) -> Result<()> {
    w.write_all(&x.to_le_bytes())?;
    Ok(())
}

pub(crate) fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).map_err(|e| Error::Format(format!("truncated input: {e}")))?;
    Ok(u64::from_le_bytes(b))
}
