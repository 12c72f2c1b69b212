// three.js scene wrapper. The meshes arrive pre-triangulated from the API;
// this file only turns labelled vertices/facets into buffers and keeps the
// camera orbiting the boom.

import * as THREE from "three";
import { ChainResponse, WorkspacePoint } from "./api.js";

const FOLDED_COLOR = new THREE.Color("#4f7fd9");
const POPPED_COLOR = new THREE.Color("#e0944b");
const EDGE_COLOR = 0x222222;

export class BoomViewer {
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private renderer: THREE.WebGLRenderer;
  private boomGroup = new THREE.Group();
  private overlayGroup = new THREE.Group();
  private orbitAngle = 0.6;
  private orbitHeight = 0.45;
  private orbitRadius = 4;
  private target = new THREE.Vector3(0, 0, 0.5);
  private dragging = false;
  private lastPointer = { x: 0, y: 0 };

  constructor(private canvas: HTMLCanvasElement) {
    this.renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
    this.camera = new THREE.PerspectiveCamera(45, 1, 0.01, 100);
    this.scene.background = new THREE.Color("#f5f2ea");
    this.scene.add(new THREE.AmbientLight(0xffffff, 0.7));
    const sun = new THREE.DirectionalLight(0xffffff, 1.2);
    sun.position.set(2, 3, 4);
    this.scene.add(sun);
    this.scene.add(this.boomGroup);
    this.scene.add(this.overlayGroup);
    this.scene.add(new THREE.AxesHelper(0.5));

    canvas.addEventListener("pointerdown", (ev) => {
      this.dragging = true;
      this.lastPointer = { x: ev.clientX, y: ev.clientY };
    });
    window.addEventListener("pointerup", () => (this.dragging = false));
    window.addEventListener("pointermove", (ev) => {
      if (!this.dragging) return;
      this.orbitAngle -= (ev.clientX - this.lastPointer.x) * 0.008;
      this.orbitHeight = Math.min(
        1.4,
        Math.max(-1.4, this.orbitHeight + (ev.clientY - this.lastPointer.y) * 0.005),
      );
      this.lastPointer = { x: ev.clientX, y: ev.clientY };
      this.render();
    });
    canvas.addEventListener("wheel", (ev) => {
      ev.preventDefault();
      this.orbitRadius = Math.min(20, Math.max(0.5, this.orbitRadius * (ev.deltaY > 0 ? 1.1 : 0.9)));
      this.render();
    });
    this.resize();
    window.addEventListener("resize", () => this.resize());
  }

  resize(): void {
    const rect = this.canvas.parentElement?.getBoundingClientRect();
    const width = rect ? rect.width : 800;
    const height = rect ? rect.height : 600;
    this.renderer.setSize(width, height, false);
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
    this.render();
  }

  showChain(response: ChainResponse): void {
    this.boomGroup.clear();
    let zTop = 0;
    for (const module of response.mesh.modules) {
      const positions: number[] = [];
      const colors: number[] = [];
      for (const facet of module.facets) {
        const popped = module.state[facet.rhombus] === "1";
        const color = popped ? POPPED_COLOR : FOLDED_COLOR;
        for (const label of facet.labels) {
          const v = module.vertices[label];
          positions.push(v[0], v[1], v[2]);
          colors.push(color.r, color.g, color.b);
          zTop = Math.max(zTop, v[2]);
        }
      }
      const geometry = new THREE.BufferGeometry();
      geometry.setAttribute("position", new THREE.Float32BufferAttribute(positions, 3));
      geometry.setAttribute("color", new THREE.Float32BufferAttribute(colors, 3));
      geometry.computeVertexNormals();
      const material = new THREE.MeshStandardMaterial({
        vertexColors: true,
        side: THREE.DoubleSide,
        flatShading: true,
      });
      this.boomGroup.add(new THREE.Mesh(geometry, material));
      this.boomGroup.add(
        new THREE.LineSegments(
          new THREE.EdgesGeometry(geometry, 1),
          new THREE.LineBasicMaterial({ color: EDGE_COLOR }),
        ),
      );
    }
    this.target.set(0, 0, zTop / 2);
    this.render();
  }

  showWorkspace(points: WorkspacePoint[] | null): void {
    this.overlayGroup.clear();
    if (points && points.length > 0) {
      const positions = points.flatMap((p) => p.position);
      const geometry = new THREE.BufferGeometry();
      geometry.setAttribute("position", new THREE.Float32BufferAttribute(positions, 3));
      const material = new THREE.PointsMaterial({ color: 0x20803c, size: 0.035 });
      this.overlayGroup.add(new THREE.Points(geometry, material));
    }
    this.render();
  }

  render(): void {
    const r = this.orbitRadius;
    this.camera.position.set(
      this.target.x + r * Math.cos(this.orbitAngle),
      this.target.y + r * Math.sin(this.orbitAngle),
      this.target.z + r * Math.tan(this.orbitHeight),
    );
    this.camera.up.set(0, 0, 1);
    this.camera.lookAt(this.target);
    this.renderer.render(this.scene, this.camera);
  }
}
