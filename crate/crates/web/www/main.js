import init, { classify_weights, compare_pentagon, domain_bounds, precision_field } from "./pkg/patchkit_web.js";

const N = 80;

function colour(err) {
  if (Number.isNaN(err)) return [200, 200, 200];
  const t = Math.min(1, Math.max(0, (Math.log10(Math.max(err, 1e-16)) + 16) / 16));
  return [Math.round(255 * t), Math.round(180 * t * t), Math.round(90 * (1 - t))];
}

function drawField() {
  const name = document.getElementById("patch").value;
  const canvas = document.getElementById("field");
  const ctx = canvas.getContext("2d");
  const values = precision_field(name, N);
  const image = ctx.createImageData(N, N);
  let max = 0;
  values.forEach((v, k) => {
    const i = k % N;
    const j = N - 1 - Math.floor(k / N);
    const [r, g, b] = colour(v);
    const o = 4 * (j * N + i);
    image.data.set([r, g, b, 255], o);
    if (!Number.isNaN(v)) max = Math.max(max, v);
  });
  const off = new OffscreenCanvas(N, N);
  off.getContext("2d").putImageData(image, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
  document.getElementById("field-max").textContent = `max |tau(x) - x| = ${max.toExponential(3)}`;
}

const PENTAGON = [[0, 0], [2, 0], [2, 1], [1, 2], [0, 2]];
let box;

function toCanvas([s, t], canvas, [x0, x1, y0, y1]) {
  return [((s - x0) / (x1 - x0)) * canvas.width, canvas.height - ((t - y0) / (y1 - y0)) * canvas.height];
}

function drawPentagon(marks) {
  const canvas = document.getElementById("pentagon");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.beginPath();
  PENTAGON.forEach((p, k) => {
    const [x, y] = toCanvas(p, canvas, box);
    k === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  });
  ctx.closePath();
  ctx.fillStyle = "#eef";
  ctx.fill();
  ctx.stroke();
  for (const [p, style] of marks) {
    const [x, y] = toCanvas(p, canvas, box);
    ctx.fillStyle = style;
    ctx.beginPath();
    ctx.arc(x, y, 4, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function onPentagonClick(event) {
  const canvas = event.currentTarget;
  const rect = canvas.getBoundingClientRect();
  const [x0, x1, y0, y1] = box;
  const s = x0 + ((event.clientX - rect.left) / rect.width) * (x1 - x0);
  const t = y1 - ((event.clientY - rect.top) / rect.height) * (y1 - y0);
  const r = JSON.parse(compare_pentagon(s, t));
  const out = document.getElementById("compare");
  if (r.error) {
    out.textContent = `(${s.toFixed(3)}, ${t.toFixed(3)}): ${r.error}`;
    drawPentagon([]);
    return;
  }
  drawPentagon([[[s, t], "#000"], [r.toric_tau, "#c33"], [r.ipf_tau, "#3a3"]]);
  const rows = r.points
    .map((a, k) => `<tr><td>(${a[0]}, ${a[1]})</td><td>${r.toric[k].toFixed(6)}</td><td>${r.ipf[k].toFixed(6)}</td></tr>`)
    .join("");
  out.innerHTML =
    `<p>x = (${s.toFixed(4)}, ${t.toFixed(4)}), ${r.iterations} IPF iterations</p>` +
    `<p><span style="color:#c33">toric tau</span> = (${r.toric_tau.map((v) => v.toFixed(4)).join(", ")})<br>` +
    `<span style="color:#3a3">IPF tau</span> = (${r.ipf_tau.map((v) => v.toFixed(4)).join(", ")})</p>` +
    `<table><tr><th>point</th><th>toric</th><th>IPF</th></tr>${rows}</table>`;
}

function classify() {
  const r = JSON.parse(classify_weights(document.getElementById("weights").value));
  const out = document.getElementById("verdict");
  if (r.error) out.textContent = r.error;
  else if (r.linear_precision) out.textContent = `rational linear precision, weights are c (x + ${r.alpha})^n coefficients`;
  else out.textContent = "no rational linear precision";
}

await init();
const [x0, x1, y0, y1] = domain_bounds("pentagon");
box = [x0 - 0.2, x1 + 0.2, y0 - 0.2, y1 + 0.2];
document.getElementById("patch").addEventListener("change", drawField);
document.getElementById("pentagon").addEventListener("click", onPentagonClick);
document.getElementById("weights").addEventListener("input", classify);
drawField();
drawPentagon([]);
classify();
