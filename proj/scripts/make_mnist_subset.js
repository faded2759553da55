#!/usr/bin/env node
// Converts the per-digit MNIST samples bundled with the npm "mnist" package
// (https://www.npmjs.com/package/mnist) into a pair of gzip-compressed IDX
// files under data/mnist-subset/.
//
// The package stores each pixel as round(byte / 255, 3 decimals); since
// consecutive byte values differ by ~0.0039 > rounding error, round(v * 255)
// recovers the original MNIST pixel bytes exactly.
//
// Usage: npm install mnist && node scripts/make_mnist_subset.js [outdir]

'use strict';

const fs = require('fs');
const path = require('path');
const zlib = require('zlib');

const mnist = require('mnist');

const outDir = process.argv[2] || path.join(__dirname, '..', 'data', 'mnist-subset');
fs.mkdirSync(outDir, { recursive: true });

const perDigit = [];
for (let d = 0; d < 10; d++) {
  const set = mnist[d];
  const samples = [];
  for (let i = 0; i < set.length; i++) samples.push(set.get(i));
  perDigit.push(samples);
}

// Round-robin interleave so any prefix of the file is roughly class-balanced.
const images = [];
const labels = [];
let remaining = perDigit.reduce((a, s) => a + s.length, 0);
const cursor = new Array(10).fill(0);
while (remaining > 0) {
  for (let d = 0; d < 10; d++) {
    if (cursor[d] < perDigit[d].length) {
      images.push(perDigit[d][cursor[d]++]);
      labels.push(d);
      remaining--;
    }
  }
}

const n = images.length;
const rows = 28, cols = 28;

const imgBuf = Buffer.alloc(16 + n * rows * cols);
imgBuf.writeUInt32BE(2051, 0);
imgBuf.writeUInt32BE(n, 4);
imgBuf.writeUInt32BE(rows, 8);
imgBuf.writeUInt32BE(cols, 12);
let off = 16;
for (const img of images) {
  if (img.length !== rows * cols) throw new Error('bad sample dim ' + img.length);
  for (const v of img) imgBuf.writeUInt8(Math.round(v * 255), off++);
}

const lblBuf = Buffer.alloc(8 + n);
lblBuf.writeUInt32BE(2049, 0);
lblBuf.writeUInt32BE(n, 4);
for (let i = 0; i < n; i++) lblBuf.writeUInt8(labels[i], 8 + i);

// Fixed mtime/level so the archives are reproducible byte for byte.
const gz = (buf) => zlib.gzipSync(buf, { level: 9, mtime: 0 });
fs.writeFileSync(path.join(outDir, 'images-idx3-ubyte.gz'), gz(imgBuf));
fs.writeFileSync(path.join(outDir, 'labels-idx1-ubyte.gz'), gz(lblBuf));

const counts = perDigit.map((s) => s.length);
console.log(`wrote ${n} samples to ${outDir}`);
console.log('per-digit counts:', counts.join(' '));
