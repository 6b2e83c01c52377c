import init, { ground_state, energy_curve, nu_sweep } from "./pkg/hodelta_wasm.js";

const $ = (id) => document.getElementById(id);

function frame(ctx, xs, ys) {
  const pad = 40;
  const { width: w, height: h } = ctx.canvas;
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (y1 - y0 < 1e-9) { y0 -= 0.5; y1 += 0.5; }
  const px = (x) => pad + ((x - x0) / (x1 - x0)) * (w - 2 * pad);
  const py = (y) => h - pad - ((y - y0) / (y1 - y0)) * (h - 2 * pad);
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.font = "12px monospace";
  ctx.fillText(x0.toFixed(2), pad, h - pad + 15);
  ctx.fillText(x1.toFixed(2), w - pad - 30, h - pad + 15);
  ctx.fillText(y1.toFixed(3), 2, pad + 4);
  ctx.fillText(y0.toFixed(3), 2, h - pad);
  return { px, py };
}

function line(ctx, pts, { px, py }, color, dash = []) {
  ctx.strokeStyle = color;
  ctx.setLineDash(dash);
  ctx.beginPath();
  pts.forEach(([x, y], i) => (i ? ctx.lineTo(px(x), py(y)) : ctx.moveTo(px(x), py(y))));
  ctx.stroke();
  ctx.setLineDash([]);
}

function pairs(flat, stride) {
  const out = [];
  for (let i = 0; i < flat.length; i += stride) out.push(Array.from(flat.slice(i, i + stride)));
  return out;
}

function showGround() {
  const g = Number($("g").value);
  $("g-val").textContent = g.toFixed(2);
  const s = ground_state(g);
  $("ground").textContent =
    `${s.family}: alpha_min = ${s.alpha_min.toFixed(6)}, ` +
    `nu_var = ${s.nu_variational.toFixed(6)}, nu_exact = ${s.nu_exact.toFixed(6)}`;
  const lo = Math.max(0.05, s.alpha_min * 0.4);
  const hi = s.alpha_min * 1.8;
  const pts = pairs(energy_curve(g, lo, hi, 200), 2);
  const eps = s.nu_exact + 0.5;
  const ctx = $("curve").getContext("2d");
  const floor = Math.min(...pts.map((p) => p[1]));
  const shown = pts.filter((p) => p[1] <= floor + 3 * (floor - eps) + 0.3);
  const f = frame(ctx, shown.map((p) => p[0]), shown.map((p) => p[1]).concat([eps]));
  line(ctx, shown, f, "#1f5fa8");
  line(ctx, [[lo, eps], [hi, eps]], f, "#c33", [5, 4]);
  s.free();
}

function showSweep() {
  const lo = Number($("lo").value);
  const hi = Number($("hi").value);
  $("sweep-msg").textContent = "";
  let rows;
  try {
    rows = pairs(nu_sweep(lo, hi, 81), 3);
  } catch (e) {
    $("sweep-msg").textContent = String(e.message ?? e);
    return;
  }
  const ctx = $("sweep").getContext("2d");
  const f = frame(ctx, rows.map((r) => r[0]), rows.flatMap((r) => [r[1], r[2]]));
  line(ctx, rows.map((r) => [r[0], r[1]]), f, "#1f5fa8");
  ctx.fillStyle = "#c33";
  for (const [g, , v] of rows) ctx.fillRect(f.px(g) - 2, f.py(v) - 2, 4, 4);
}

await init();
$("g").addEventListener("input", showGround);
$("sweep-btn").addEventListener("click", showSweep);
showGround();
showSweep();
