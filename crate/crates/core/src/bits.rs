//! Bit-sequence helpers shared by the codec and modem layers.
//!
//! Bits are carried as `Vec<bool>` / `&[bool]` with MSB-first octet packing:
//! bit index `i` of a packed stream lives in octet `i / 8` at position
//! `7 - (i % 8)`.

/// Unpack octets into bits, MSB first.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    let mut out = Vec::with_capacity(bytes.len() * 8);
    for &b in bytes {
        for i in (0..8).rev() {
            out.push((b >> i) & 1 == 1);
        }
    }
    out
}

/// Pack bits into octets, MSB first. The bit count must be a multiple of 8.
pub fn bits_to_bytes(bits: &[bool]) -> Vec<u8> {
    assert!(bits.len() % 8 == 0, "bit count {} not octet aligned", bits.len());
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .fold(0u8, |acc, &b| (acc << 1) | u8::from(b))
        })
        .collect()
}

/// Incremental MSB-first bit writer used for packed field layouts.
#[derive(Debug, Default)]
pub struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append the low `count` bits of `value`, most significant first.
    pub fn push(&mut self, value: u64, count: usize) {
        assert!(count <= 64);
        for i in (0..count).rev() {
            self.bits.push((value >> i) & 1 == 1);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    /// Pack the accumulated bits into octets; must be octet aligned.
    pub fn into_bytes(self) -> Vec<u8> {
        bits_to_bytes(&self.bits)
    }
}

/// Incremental MSB-first bit reader over a packed octet slice.
#[derive(Debug)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    /// Read the next `count` bits as an unsigned value, most significant first.
    pub fn read(&mut self, count: usize) -> u64 {
        assert!(count <= 64);
        assert!(self.pos + count <= self.bytes.len() * 8, "bit reader overrun");
        let mut v = 0u64;
        for _ in 0..count {
            let byte = self.bytes[self.pos / 8];
            let bit = (byte >> (7 - self.pos % 8)) & 1;
            v = (v << 1) | u64::from(bit);
            self.pos += 1;
        }
        v
    }

    pub fn remaining_bits(&self) -> usize {
        self.bytes.len() * 8 - self.pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bytes_bits_round_trip() {
        let data = vec![0x00, 0xFF, 0xA5, 0x3C, 0x01];
        assert_eq!(bits_to_bytes(&bytes_to_bits(&data)), data);
    }

    #[test]
    fn msb_first_order() {
        // 0xA5 = 1010_0101
        let bits = bytes_to_bits(&[0xA5]);
        let expect = [true, false, true, false, false, true, false, true];
        assert_eq!(bits, expect);
    }

    #[test]
    fn writer_reader_field_round_trip() {
        let mut w = BitWriter::new();
        w.push(0b10, 2);
        w.push(0x1FFF, 14);
        w.push(0xDEADBEEF, 32);
        let bytes = w.into_bytes();
        assert_eq!(bytes.len(), 6);

        let mut r = BitReader::new(&bytes);
        assert_eq!(r.read(2), 0b10);
        assert_eq!(r.read(14), 0x1FFF);
        assert_eq!(r.read(32), 0xDEADBEEF);
        assert_eq!(r.remaining_bits(), 0);
    }
}
