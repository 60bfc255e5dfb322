import init, { analyze, cyclic, plane, random } from "./pkg/covnum_wasm.js";

const PALETTE = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
  "#f032e6", "#bfef45", "#469990", "#9a6324", "#800000", "#000075"];

const $ = (id) => document.getElementById(id);

function colorOf(c) {
  return PALETTE[(c - 1) % PALETTE.length];
}

function el(tag, attrs = {}, ...children) {
  const node = document.createElement(tag);
  Object.assign(node, attrs);
  for (const child of children) {
    node.append(child instanceof Node ? child : String(child));
  }
  return node;
}

function table(headers, rows) {
  return el("table", {},
    el("tr", {}, ...headers.map((h) => el("th", {}, h))),
    ...rows.map((row) => el("tr", {}, ...row.map((cell) => cell instanceof Node ? cell : el("td", {}, cell)))));
}

function swatch(c) {
  const td = el("td", {}, c);
  td.style.color = colorOf(c);
  return td;
}

function showError(target, err) {
  target.replaceChildren(el("p", { className: "error" }, err.message ?? err));
}

function renderAnalysis(a) {
  const out = [];
  out.push(el("p", {},
    `r = ${a.r}, k = ${a.k}, parts ${a.parts.join(" × ")}. `,
    a.spanning ? "Spanning: " : "Not spanning: ", a.spanning_note, "."));
  out.push(el("p", {},
    el("strong", {}, `Minimum cover: ${a.min_cover.length} component(s)`),
    ` (greedy finds ${a.greedy_size})`,
    a.biclique_branch ? `; the constructive 3-color argument ends in branch “${a.biclique_branch}”.` : "."));
  out.push(table(["color", "component", "vertices"],
    a.min_cover.map((m) => [swatch(m.color), m.component, m.vertices.join(" ")])));

  if (a.grid) {
    const rows = a.grid.map((row, i) => el("tr", {},
      el("th", {}, `a${i + 1}`),
      ...row.map((c) => {
        const td = el("td", {}, c);
        td.style.background = colorOf(c);
        td.style.color = "#fff";
        return td;
      })));
    const head = el("tr", {}, el("th", {}), ...a.grid[0].map((_, j) => el("th", {}, `b${j + 1}`)));
    out.push(el("p", { className: "note" }, "Edge colors (rows: first part, columns: second part)."));
    out.push(el("table", { className: "grid" }, head, ...rows));
  }

  out.push(el("p", { className: "note" }, "Components per color:"));
  out.push(table(["color", "components", "sizes"],
    a.colors.map((c) => [swatch(c.color), c.components, c.sizes.join(" ")])));
  out.push(el("p", { className: "note" }, "Component vector of each vertex (its component id in colors 1…k):"));
  out.push(table(["vertex", "vector"], a.vertices.map((v) => [v.label, v.vector.join(" ")])));
  $("analysis").replaceChildren(...out);
}

function runAnalysis() {
  try {
    renderAnalysis(JSON.parse(analyze($("coloring").value)));
  } catch (err) {
    showError($("analysis"), err);
  }
}

function setColoring(text) {
  $("coloring").value = text.trim();
  runAnalysis();
}

function runPlane() {
  try {
    const p = JSON.parse(plane(Number($("plane-q").value)));
    const inCover = new Set(p.tau_witness);
    $("plane").replaceChildren(
      el("p", {}, `${p.vertices} points in ${p.parts.length} parts of size ${p.parts[0]}, `,
        `${p.edges.length} lines, intersecting: ${p.intersecting ? "yes" : "no"}.`),
      el("p", {}, el("strong", {}, `τ = ${p.tau}, ν = ${p.nu}`),
        `; a minimum vertex cover is {${p.tau_witness.join(", ")}}.`),
      table(["line", "points", "meets cover at"],
        p.edges.map((e, i) => [i, e.join(" "), e.filter((v) => inCover.has(v)).join(" ")])));
  } catch (err) {
    showError($("plane"), err);
  }
}

await init();

$("cyclic-go").addEventListener("click", () => {
  try {
    setColoring(cyclic(Number($("cyclic-k").value)));
  } catch (err) {
    showError($("analysis"), err);
  }
});
$("rand-go").addEventListener("click", () => {
  try {
    setColoring(random(Number($("rand-r").value), Number($("rand-k").value),
      $("rand-parts").value, Number($("rand-seed").value) >>> 0));
  } catch (err) {
    showError($("analysis"), err);
  }
});
$("analyze-go").addEventListener("click", runAnalysis);
$("plane-go").addEventListener("click", runPlane);

setColoring(cyclic(3));
runPlane();
